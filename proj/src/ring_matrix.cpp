#include "chevcomm/ring_matrix.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

namespace chevcomm {

MatrixSpace::MatrixSpace(FiniteRing ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
  if (n == 0 || n > 16) throw std::invalid_argument("matrix size must be in [1, 16]");
}

Mat MatrixSpace::zero() const { return Mat(width(), 0); }

Mat MatrixSpace::identity() const {
  Mat m = zero();
  for (std::size_t c = 0; c < ring_.components(); ++c) {
    for (std::size_t i = 0; i < n_; ++i) m[c * n_ * n_ + i * n_ + i] = 1;
  }
  return m;
}

void MatrixSpace::mul(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const {
  const std::size_t n = n_;
  const std::size_t block = n * n;
  for (std::size_t c = 0; c < ring_.components(); ++c) {
    const std::uint32_t m = static_cast<std::uint32_t>(ring_.moduli()[c]);
    const std::uint8_t* xc = x + c * block;
    const std::uint8_t* yc = y + c * block;
    std::uint8_t* oc = out + c * block;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t acc[16] = {};
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t v = xc[i * n + k];
        if (v == 0) continue;
        const std::uint8_t* yrow = yc + k * n;
        for (std::size_t j = 0; j < n; ++j) acc[j] += v * yrow[j];
      }
      for (std::size_t j = 0; j < n; ++j) oc[i * n + j] = static_cast<std::uint8_t>(acc[j] % m);
    }
  }
}

Mat MatrixSpace::mul(const Mat& x, const Mat& y) const {
  Mat out(width());
  mul(x.data(), y.data(), out.data());
  return out;
}

Mat MatrixSpace::from_int(const IntMatrix& a) const {
  if (a.n != n_) throw std::invalid_argument("integer matrix of wrong size");
  Mat m = zero();
  for (std::size_t c = 0; c < ring_.components(); ++c) {
    const long long mod = ring_.moduli()[c];
    for (std::size_t k = 0; k < n_ * n_; ++k) m[c * n_ * n_ + k] = static_cast<std::uint8_t>(((a.a[k] % mod) + mod) % mod);
  }
  return m;
}

RingElem MatrixSpace::entry(const Mat& m, std::size_t i, std::size_t j) const {
  RingElem out;
  for (std::size_t c = 0; c < ring_.components(); ++c) out.residues.push_back(m[c * n_ * n_ + i * n_ + j]);
  return out;
}

void MatrixSpace::set_entry(Mat& m, std::size_t i, std::size_t j, const RingElem& v) const {
  const RingElem r = ring_.from_residues(v.residues);
  for (std::size_t c = 0; c < ring_.components(); ++c) {
    m[c * n_ * n_ + i * n_ + j] = static_cast<std::uint8_t>(r.residues[c]);
  }
}

bool MatrixSpace::reduces_to_identity(const std::uint8_t* m, const Ideal& level) const {
  const auto& d = level.component_levels();
  for (std::size_t c = 0; c < ring_.components(); ++c) {
    const int dc = d[c];
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        int v = m[c * n_ * n_ + i * n_ + j] - (i == j ? 1 : 0);
        if (v % dc != 0) return false;
      }
    }
  }
  return true;
}

RingElem MatrixSpace::determinant(const Mat& m) const {
  std::vector<int> residues;
  for (std::size_t c = 0; c < ring_.components(); ++c) {
    // Bareiss elimination over Z on the residue representatives.
    std::vector<mpz_class> a(n_ * n_);
    for (std::size_t k = 0; k < n_ * n_; ++k) a[k] = m[c * n_ * n_ + k];
    mpz_class prev = 1;
    int sign = 1;
    bool singular = false;
    for (std::size_t k = 0; k + 1 < n_ && !singular; ++k) {
      if (a[k * n_ + k] == 0) {
        std::size_t p = k + 1;
        while (p < n_ && a[p * n_ + k] == 0) ++p;
        if (p == n_) {
          singular = true;
          break;
        }
        for (std::size_t j = 0; j < n_; ++j) std::swap(a[k * n_ + j], a[p * n_ + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n_; ++i) {
        for (std::size_t j = k + 1; j < n_; ++j) {
          a[i * n_ + j] = (a[i * n_ + j] * a[k * n_ + k] - a[i * n_ + k] * a[k * n_ + j]) / prev;
        }
      }
      prev = a[k * n_ + k];
    }
    mpz_class det = singular ? mpz_class(0) : mpz_class(sign * a[n_ * n_ - 1]);
    const mpz_class mod = ring_.moduli()[c];
    mpz_class r = det % mod;
    if (r < 0) r += mod;
    residues.push_back(static_cast<int>(r.get_si()));
  }
  return ring_.from_residues(residues);
}

bool MatrixSpace::preserves_form(const Mat& m, const IntMatrix& form) const {
  const Mat f = from_int(form);
  Mat t = zero();
  for (std::size_t c = 0; c < ring_.components(); ++c) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t[c * n_ * n_ + j * n_ + i] = m[c * n_ * n_ + i * n_ + j];
    }
  }
  return mul(mul(t, f), m) == f;
}

std::string MatrixSpace::format(const Mat& m) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ' ';
      os << ring_.format(entry(m, i, j));
    }
  }
  os << ']';
  return os.str();
}

std::string MatrixSpace::describe() const {
  return std::to_string(n_) + "x" + std::to_string(n_) + " over " + ring_.describe();
}

Ambient::Ambient(SystemLabel label, FiniteRing ring) : rep_(label), space_(std::move(ring), rep_.dimension()) {
  const auto& sys = rep_.system();
  for (const auto& r : sys.roots()) negatives_.push_back(sys.index_of(sys.negate(r)));
}

Mat Ambient::unipotent(std::size_t root, const RingElem& t) const {
  const FiniteRing& ring = space_.ring();
  const auto& terms = rep_.exp_terms(root);
  const std::size_t n = space_.n();
  Mat m = space_.identity();
  for (std::size_t c = 0; c < ring.components(); ++c) {
    const long long mod = ring.moduli()[c];
    const long long tc = ring.from_residues(t.residues).residues[c];
    long long tk = 1;
    std::vector<long long> acc(n * n, 0);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      for (std::size_t e = 0; e < n * n; ++e) acc[e] = (acc[e] + (terms[k].a[e] % mod) * tk) % mod;
      tk = tk * tc % mod;
    }
    for (std::size_t e = 0; e < n * n; ++e) m[c * n * n + e] = static_cast<std::uint8_t>((acc[e] + mod) % mod);
  }
  return m;
}

GroupElem Ambient::identity() const { return {space_.identity(), space_.identity()}; }

GroupElem Ambient::x(std::size_t root, const RingElem& t) const {
  return {unipotent(root, t), unipotent(root, ring().neg(t))};
}

GroupElem Ambient::mul(const GroupElem& g, const GroupElem& h) const {
  return {space_.mul(g.mat, h.mat), space_.mul(h.inv, g.inv)};
}

GroupElem Ambient::commutator(const GroupElem& g, const GroupElem& h) const {
  return mul(mul(g, h), mul(inverse(g), inverse(h)));
}

GroupElem Ambient::conjugate(const GroupElem& g, const GroupElem& h) const { return mul(mul(g, h), inverse(g)); }

GroupElem Ambient::power(const GroupElem& g, int k) const {
  GroupElem base = k < 0 ? inverse(g) : g;
  GroupElem out = identity();
  for (int i = 0; i < std::abs(k); ++i) out = mul(out, base);
  return out;
}

GroupElem Ambient::y(std::size_t root, const RingElem& a, const RingElem& b) const {
  return commutator(x(root, a), x(negatives_.at(root), b));
}

GroupElem Ambient::z(std::size_t root, const RingElem& a, const RingElem& c) const {
  const GroupElem u = x(negatives_.at(root), c);
  return conjugate(u, x(root, a));
}

GroupElem Ambient::eval(const Word& w, const Assignment& assignment) const {
  GroupElem out = identity();
  for (const auto& t : w.tokens) out = mul(out, x(t.root, poly_eval(t.coef, assignment, ring())));
  return out;
}

std::string Ambient::describe() const {
  return rep_.system().label().str() + " as " + rep_.describe() + " over " + ring().describe();
}

}  // namespace chevcomm
