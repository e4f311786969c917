#include "chevcomm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chevcomm {

namespace {

unsigned degree_of(const std::vector<unsigned>& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::vector<std::string> merged(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  std::vector<std::string> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

MultiPoly::Terms remap(const MultiPoly& p, const std::vector<std::string>& target) {
  std::vector<std::size_t> where;
  for (const auto& v : p.variables()) {
    where.push_back(static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), v) - target.begin()));
  }
  MultiPoly::Terms out;
  for (const auto& [e, c] : p.terms()) {
    std::vector<unsigned> f(target.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) f[where[k]] = e[k];
    out.emplace(std::move(f), c);
  }
  return out;
}

}  // namespace

bool GradedLex::operator()(const std::vector<unsigned>& x, const std::vector<unsigned>& y) const {
  const unsigned dx = degree_of(x), dy = degree_of(y);
  if (dx != dy) return dx < dy;
  return x < y;
}

MultiPoly::MultiPoly(long long constant) : MultiPoly(mpz_class(static_cast<long>(constant))) {}

MultiPoly::MultiPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MultiPoly::MultiPoly(std::vector<std::string> variables, Terms terms) : vars_(std::move(variables)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector does not match variable list");
  }
  if (!std::is_sorted(vars_.begin(), vars_.end()) ||
      std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
    MultiPoly tmp;
    tmp.vars_ = vars_;
    tmp.terms_ = std::move(terms);
    std::vector<std::string> sorted = vars_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // Sum duplicate variable columns into the sorted list.
    Terms out;
    for (const auto& [e, c] : tmp.terms_) {
      std::vector<unsigned> f(sorted.size(), 0);
      for (std::size_t k = 0; k < e.size(); ++k) {
        f[static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), vars_[k]) - sorted.begin())] += e[k];
      }
      out[f] += c;
    }
    vars_ = std::move(sorted);
    terms_ = std::move(out);
  } else {
    terms_ = std::move(terms);
  }
  normalize();
}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  Terms t;
  t.emplace(Exponents{1}, mpz_class(1));
  return MultiPoly({name}, std::move(t));
}

void MultiPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) used[k] = used[k] || e[k] > 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> keep;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (used[k]) keep.push_back(vars_[k]);
  }
  Terms out;
  for (const auto& [e, c] : terms_) {
    std::vector<unsigned> f;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (used[k]) f.push_back(e[k]);
    }
    out.emplace(std::move(f), c);
  }
  vars_ = std::move(keep);
  terms_ = std::move(out);
}

mpz_class MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class MultiPoly::coefficient(const std::map<std::string, unsigned>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, power] : monomial) {
    if (power == 0) continue;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return 0;
    e[static_cast<std::size_t>(it - vars_.begin())] = power;
  }
  auto t = terms_.find(e);
  return t == terms_.end() ? mpz_class(0) : t->second;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly out(1);
  for (unsigned k = 0; k < exponent; ++k) out = out * *this;
  return out;
}

MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly out;
  if (x.vars_ == y.vars_) {
    out.vars_ = x.vars_;
    out.terms_ = x.terms_;
    for (const auto& [e, c] : y.terms_) out.terms_[e] += c;
  } else {
    out.vars_ = merged(x.vars_, y.vars_);
    out.terms_ = remap(x, out.vars_);
    for (auto& [e, c] : remap(y, out.vars_)) out.terms_[e] += c;
  }
  out.normalize();
  return out;
}

MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) { return x + (-y); }

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  MultiPoly out;
  out.vars_ = merged(x.vars_, y.vars_);
  const auto tx = x.vars_ == out.vars_ ? x.terms_ : remap(x, out.vars_);
  const auto ty = y.vars_ == out.vars_ ? y.terms_ : remap(y, out.vars_);
  std::vector<unsigned> e(out.vars_.size());
  for (const auto& [ex, cx] : tx) {
    for (const auto& [ey, cy] : ty) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ex[k] + ey[k];
      out.terms_[e] += cx * cy;
    }
  }
  out.normalize();
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || degree_of(e) == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << '*';
      os << vars_[k];
      if (e[k] > 1) os << '^' << e[k];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly poly_add(const MultiPoly& x, const MultiPoly& y) { return x + y; }
MultiPoly poly_sub(const MultiPoly& x, const MultiPoly& y) { return x - y; }
MultiPoly poly_mul(const MultiPoly& x, const MultiPoly& y) { return x * y; }
MultiPoly poly_neg(const MultiPoly& x) { return -x; }

RingElem poly_eval(const MultiPoly& p, const Assignment& assignment, const FiniteRing& ring) {
  std::vector<const RingElem*> values;
  for (const auto& v : p.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw std::invalid_argument("variable '" + v + "' is not assigned");
    values.push_back(&it->second);
  }
  RingElem acc = ring.zero();
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> coef;
    for (int m : ring.moduli()) {
      coef.push_back(static_cast<int>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(m))));
    }
    RingElem term = ring.from_residues(std::move(coef));
    for (std::size_t k = 0; k < e.size(); ++k) term = ring.mul(term, ring.pow(*values[k], e[k]));
    acc = ring.add(acc, term);
  }
  return acc;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const auto ch = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(ch) || ch == '(';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial '" + std::string(s_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  MultiPoly expr() {
    MultiPoly p = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        p = p + term();
      } else if (peek('-')) {
        ++pos_;
        p = p - term();
      } else {
        return p;
      }
    }
  }

  MultiPoly term() {
    MultiPoly p = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        p = p * unary();
      } else if (starts_factor()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  MultiPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("operand expected");
    const auto ch = static_cast<unsigned char>(s_[pos_]);
    if (ch == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!peek(')')) fail("')' expected");
      ++pos_;
      return p;
    }
    if (std::isdigit(ch)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(ch)) {
      std::size_t start = pos_++;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, static_cast<char>(ch)) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace chevcomm
