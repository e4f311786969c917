#include "chevcomm/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chevcomm {

Word x_word(std::size_t root, MultiPoly coef) { return Word{{Token{root, std::move(coef)}}}; }

Word operator*(const Word& u, const Word& v) {
  Word out = u;
  out.tokens.insert(out.tokens.end(), v.tokens.begin(), v.tokens.end());
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.tokens.reserve(w.tokens.size());
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) out.tokens.push_back(Token{it->root, -it->coef});
  return out;
}

Word commutator(const Word& u, const Word& v) { return u * v * inverse(u) * inverse(v); }

Word conjugate(const Word& u, const Word& v) { return u * v * inverse(u); }

Word power(const Word& w, int k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

Word y_word(const RootSystem& sys, std::size_t root, const MultiPoly& a, const MultiPoly& b) {
  const std::size_t neg = sys.index_of(sys.negate(sys.root(root)));
  return commutator(x_word(root, a), x_word(neg, b));
}

Word z_word(const RootSystem& sys, std::size_t root, const MultiPoly& a, const MultiPoly& c) {
  const std::size_t neg = sys.index_of(sys.negate(sys.root(root)));
  return x_word(neg, c) * x_word(root, a) * x_word(neg, -c);
}

Word substitute(const Word& w, const std::map<std::string, MultiPoly>& values) {
  Word out;
  for (const auto& t : w.tokens) {
    MultiPoly acc;
    for (const auto& [e, c] : t.coef.terms()) {
      MultiPoly term{mpz_class(c)};
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        const auto& name = t.coef.variables()[k];
        auto it = values.find(name);
        term = term * (it == values.end() ? MultiPoly::variable(name) : it->second).pow(e[k]);
      }
      acc = acc + term;
    }
    out.tokens.push_back(Token{t.root, acc});
  }
  return out;
}

RootNames default_root_names(const RootSystem& sys) {
  RootNames names;
  const auto& f = sys.fundamentals();
  for (std::size_t k = 0; k < f.size(); ++k) names["a" + std::to_string(k + 1)] = f[k].coords;
  if (sys.rank() == 2) {
    if (sys.label().family == Family::C) {
      names["alpha"] = f[1].coords;
      names["beta"] = f[0].coords;
    } else {
      names["alpha"] = f[0].coords;
      names["beta"] = f[1].coords;
    }
  }
  return names;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("cannot parse '" + std::string(text) + "': " + what + " at offset " +
                              std::to_string(pos));
}

std::vector<int> parse_root_vector(std::string_view text, const RootSystem& sys, const RootNames& names) {
  std::vector<int> acc(sys.ambient_dimension(), 0);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool any = false;
  skip();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (any) {
      parse_fail(text, pos, "'+' or '-' expected");
    }
    int coef = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      coef = std::stoi(std::string(text.substr(start, pos - start)));
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    std::vector<int> v;
    if (pos < text.size() && text[pos] == '(') {
      const std::size_t close = text.find(')', pos);
      if (close == std::string_view::npos) parse_fail(text, pos, "')' expected");
      std::string inner(text.substr(pos + 1, close - pos - 1));
      std::replace(inner.begin(), inner.end(), ',', ' ');
      std::istringstream is(inner);
      int x;
      while (is >> x) v.push_back(x);
      if (!is.eof()) parse_fail(text, pos, "bad coordinate tuple");
      pos = close + 1;
    } else if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      const std::string name(text.substr(start, pos - start));
      auto it = names.find(name);
      if (it == names.end()) parse_fail(text, start, "unknown root name '" + name + "'");
      v = it->second;
    } else {
      parse_fail(text, pos, "root name or coordinates expected");
    }
    if (v.size() != acc.size()) parse_fail(text, pos, "coordinate tuple of wrong length");
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += sign * coef * v[k];
    any = true;
    skip();
  }
  if (!any) parse_fail(text, 0, "empty root");
  return acc;
}

class WordParser {
 public:
  WordParser(std::string_view text, const RootSystem& sys, const RootNames& names)
      : s_(text), sys_(sys), names_(names) {}

  Word parse() {
    Word w = seq();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }
  void expect(char ch) {
    if (!at(ch)) fail(std::string("'") + ch + "' expected");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { parse_fail(s_, pos_, what); }

  // Text up to the matching close bracket or a top-level separator.
  std::string_view until(const std::string& stops) {
    skip();
    int depth = 0;
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const char ch = s_[pos_];
      if (depth == 0 && stops.find(ch) != std::string::npos) break;
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      if (ch == ')' || ch == ']' || ch == '}') --depth;
      ++pos_;
    }
    if (pos_ >= s_.size()) fail("unterminated argument");
    return s_.substr(start, pos_ - start);
  }

  bool item_starts() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char ch = s_[pos_];
    if (ch == '[' || ch == '(') return true;
    if (ch == '^') return pos_ + 1 < s_.size() && s_[pos_ + 1] == '{';
    return ch == 'x' || ch == 'y' || ch == 'z' || ch == 'e' || ch == 'i';
  }

  Word seq() {
    Word w = item();
    for (;;) {
      if (at('*')) {
        ++pos_;
        w = w * item();
      } else if (item_starts()) {
        w = w * item();
      } else {
        return w;
      }
    }
  }

  Word item() {
    Word w = primary();
    skip();
    if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] != '{') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("integer exponent expected");
      w = power(w, std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return w;
  }

  const Root& bracket_root() {
    expect('[');
    std::string_view text = until("]");
    expect(']');
    return parse_root(text, sys_, names_);
  }

  std::vector<MultiPoly> args(std::size_t count) {
    expect('(');
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < count; ++k) {
      std::string_view text = until(k + 1 < count ? "," : ")");
      out.push_back(parse_poly(text));
      expect(k + 1 < count ? ',' : ')');
    }
    return out;
  }

  Word primary() {
    skip();
    if (pos_ >= s_.size()) fail("generator expected");
    const char ch = s_[pos_];
    if (ch == '[') {
      ++pos_;
      Word u = seq();
      expect(',');
      Word v = seq();
      expect(']');
      return commutator(u, v);
    }
    if (ch == '^') {
      ++pos_;
      expect('{');
      Word u = seq();
      expect('}');
      return conjugate(u, item());
    }
    if (ch == '(') {
      ++pos_;
      Word u = seq();
      expect(')');
      return u;
    }
    if (s_.substr(pos_, 3) == "inv") {
      pos_ += 3;
      expect('(');
      Word u = seq();
      expect(')');
      return inverse(u);
    }
    if (ch == 'e') {
      ++pos_;
      return {};
    }
    if (ch == 'x' || ch == 'y' || ch == 'z') {
      ++pos_;
      const Root& r = bracket_root();
      const std::size_t idx = sys_.index_of(r);
      if (ch == 'x') return x_word(idx, args(1)[0]);
      auto p = args(2);
      return ch == 'y' ? y_word(sys_, idx, p[0], p[1]) : z_word(sys_, idx, p[0], p[1]);
    }
    fail("generator expected");
  }

  std::string_view s_;
  const RootSystem& sys_;
  const RootNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

const Root& parse_root(std::string_view text, const RootSystem& sys, const RootNames& names) {
  return sys.root(parse_root_vector(text, sys, names));
}

Word parse_word(std::string_view text, const RootSystem& sys, const RootNames& names) {
  return WordParser(text, sys, names).parse();
}

std::string render_word(const Word& w, const RootSystem& sys) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.tokens.size(); ++k) {
    if (k) os << ' ';
    const auto& c = sys.root(w.tokens[k].root).coords;
    os << "x[(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")](" << w.tokens[k].coef.str() << ')';
  }
  return os.str();
}

}  // namespace chevcomm
