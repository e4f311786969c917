#include "chevcomm/chevrep.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace chevcomm {

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (long long x : a) {
    if (x != 0) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(x.n);
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t k = 0; k < x.n; ++k) {
      const long long v = x(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) out(i, j) += v * y(k, j);
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out = x;
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += y.a[k];
  return out;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) { return x + y.scaled(-1); }

IntMatrix IntMatrix::scaled(long long s) const {
  IntMatrix out = *this;
  for (long long& v : out.a) v *= s;
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

namespace {

IntMatrix unit(std::size_t n, std::size_t i, std::size_t j, long long v = 1) {
  IntMatrix m(n);
  m(i, j) = v;
  return m;
}

IntMatrix bracket(const IntMatrix& x, const IntMatrix& y) { return x * y - y * x; }

IntMatrix exact_div(const IntMatrix& m, long long d) {
  IntMatrix out = m;
  for (long long& v : out.a) {
    if (v % d != 0) throw std::logic_error("Chevalley basis element not divisible by " + std::to_string(d));
    v /= d;
  }
  return out;
}

}  // namespace

ChevRep::ChevRep(SystemLabel label) : system_(label) {
  switch (label.family) {
    case Family::A: build_a(); break;
    case Family::C: build_c(); break;
    case Family::G: build_g2(); break;
  }
}

void ChevRep::build_a() {
  dim_ = system_.ambient_dimension();
  std::vector<IntMatrix> raw;
  for (const auto& r : system_.roots()) {
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (r.coords[k] == 1) i = k;
      if (r.coords[k] == -1) j = k;
    }
    raw.push_back(unit(dim_, i, j));
  }
  signs_.assign(raw.size(), 1);
  finish(raw);
}

// Basis order 1..l, -l..-1 so that e_i pairs with e_{-i} across the antidiagonal.
void ChevRep::build_c() {
  const int l = system_.rank();
  dim_ = static_cast<std::size_t>(2 * l);
  auto pos = [l](int i) { return static_cast<std::size_t>(i > 0 ? i - 1 : 2 * l + i); };
  auto eps = [](int i) { return i > 0 ? 1 : -1; };

  form_kind_ = FormKind::Symplectic;
  form_ = IntMatrix(dim_);
  for (int i = 1; i <= l; ++i) {
    form_(pos(i), pos(-i)) = eps(i);
    form_(pos(-i), pos(i)) = eps(-i);
  }

  std::vector<IntMatrix> raw;
  signs_.clear();
  for (const auto& r : system_.roots()) {
    std::vector<int> nz;
    for (int k = 0; k < l; ++k) {
      if (r.coords[static_cast<std::size_t>(k)] != 0) nz.push_back(k);
    }
    if (nz.size() == 1) {
      const int k = nz[0] + 1;
      const int i = r.coords[static_cast<std::size_t>(nz[0])] > 0 ? k : -k;
      raw.push_back(unit(dim_, pos(i), pos(-i)));
      // Long roots +-2e_l carry the opposite parameter sign, which makes the
      // long/short fundamental commutator come out with both constants +1.
      // -2e_1 is negated as well so that the short/long expansions with
      // N_{11} = N_{21} = 1 hold at beta = e_1 - e_2, gamma = -2e_1.
      signs_.push_back(k == l || (k == 1 && i < 0) ? -1 : 1);
    } else {
      const int p = nz[0] + 1, q = nz[1] + 1;
      const int i = r.coords[static_cast<std::size_t>(nz[0])] * p;
      const int j = -r.coords[static_cast<std::size_t>(nz[1])] * q;
      IntMatrix e = unit(dim_, pos(i), pos(j));
      e(pos(-j), pos(-i)) -= eps(i) * eps(j);
      raw.push_back(e);
      signs_.push_back(1);
    }
  }
  for (std::size_t k = 0; k < raw.size(); ++k) raw[k] = raw[k].scaled(signs_[k]);
  finish(raw);
}

// Weight basis v0..v6 of weights 2a+b, a+b, a, 0, -a, -(a+b), -(2a+b) for
// a short, b long; E(i,j) sends v_j to v_i.
void ChevRep::build_g2() {
  dim_ = 7;
  const std::size_t n = dim_;
  const IntMatrix ea = unit(n, 0, 1) + unit(n, 2, 3, 2) + unit(n, 3, 4) + unit(n, 5, 6);
  const IntMatrix fa = unit(n, 1, 0) + unit(n, 3, 2) + unit(n, 4, 3, 2) + unit(n, 6, 5);
  const IntMatrix eb = unit(n, 1, 2) + unit(n, 4, 5);
  const IntMatrix fb = unit(n, 2, 1) + unit(n, 5, 4);

  std::map<std::pair<int, int>, IntMatrix> pos;
  std::map<std::pair<int, int>, IntMatrix> neg;
  pos[{1, 0}] = ea;
  pos[{0, 1}] = eb;
  pos[{1, 1}] = bracket(ea, eb);
  pos[{2, 1}] = exact_div(bracket(ea, pos[{1, 1}]), 2);
  pos[{3, 1}] = exact_div(bracket(ea, pos[{2, 1}]), 3);
  pos[{3, 2}] = bracket(eb, pos[{3, 1}]);
  neg[{1, 0}] = fa;
  neg[{0, 1}] = fb;
  neg[{1, 1}] = bracket(fa, fb);
  neg[{2, 1}] = exact_div(bracket(fa, neg[{1, 1}]), 2);
  neg[{3, 1}] = exact_div(bracket(fa, neg[{2, 1}]), 3);
  neg[{3, 2}] = bracket(fb, neg[{3, 1}]);
  for (auto& [key, f] : neg) {
    const IntMatrix& e = pos[key];
    const IntMatrix h = bracket(e, f);
    const IntMatrix he = bracket(h, e);
    if (he == e.scaled(-2)) {
      f = f.scaled(-1);
    } else if (!(he == e.scaled(2))) {
      throw std::logic_error("G2 root vectors do not form an sl2 triple");
    }
  }

  form_kind_ = FormKind::Symmetric;
  form_ = IntMatrix(n);
  const long long diag[7] = {1, -1, 1, -2, 1, -1, 1};
  for (std::size_t i = 0; i < n; ++i) form_(i, n - 1 - i) = diag[i];

  const auto& a1 = system_.fundamentals()[0].coords;
  const auto& a2 = system_.fundamentals()[1].coords;
  std::vector<IntMatrix> raw;
  for (const auto& r : system_.roots()) {
    bool found = false;
    for (const auto& [key, e] : pos) {
      for (int s : {1, -1}) {
        std::vector<int> v(3);
        for (std::size_t k = 0; k < 3; ++k) v[k] = s * (key.first * a1[k] + key.second * a2[k]);
        if (v == r.coords) {
          raw.push_back(s > 0 ? e : neg[key]);
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("G2 root without a root vector");
  }
  signs_.assign(raw.size(), 1);
  finish(raw);
}

void ChevRep::finish(const std::vector<IntMatrix>& raw_patterns) {
  exp_terms_.clear();
  for (std::size_t idx = 0; idx < raw_patterns.size(); ++idx) {
    const IntMatrix& e = raw_patterns[idx];
    if (form_kind_ != FormKind::None && !(e.transposed() * form_ + form_ * e).is_zero()) {
      throw std::logic_error("root vector for " + system_.root(idx).str() + " does not preserve the form");
    }
    std::vector<IntMatrix> terms{IntMatrix::identity(dim_), e};
    IntMatrix power = e;
    long long factorial = 1;
    for (long long k = 2;; ++k) {
      power = power * e;
      if (power.is_zero()) break;
      if (k > static_cast<long long>(dim_)) throw std::logic_error("root vector is not nilpotent");
      factorial *= k;
      terms.push_back(exact_div(power, factorial));
    }
    exp_terms_.push_back(std::move(terms));
  }
}

std::string ChevRep::describe() const {
  std::ostringstream os;
  switch (system_.label().family) {
    case Family::A: os << "SL(" << dim_ << ")"; break;
    case Family::C: os << "Sp(" << dim_ << ")"; break;
    case Family::G: os << "G2 in GL(7)"; break;
  }
  return os.str();
}

}  // namespace chevcomm
