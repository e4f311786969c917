#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chevcomm/chevrep.hpp"
#include "chevcomm/poly.hpp"
#include "chevcomm/rings.hpp"
#include "chevcomm/word.hpp"

namespace chevcomm {

/// Canonical encoding of an n x n matrix over Z/m_1 x ... x Z/m_k: one byte
/// per residue, component-major (all entries of component 0 first). Equal
/// matrices have equal encodings and vice versa.
using Mat = std::vector<std::uint8_t>;

/// Square matrices of a fixed size over a finite ring.
class MatrixSpace {
 public:
  MatrixSpace(FiniteRing ring, std::size_t n);

  const FiniteRing& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  /// Encoding width in bytes.
  std::size_t width() const { return n_ * n_ * ring_.components(); }

  Mat identity() const;
  Mat zero() const;
  /// out = x * y; out must not alias x or y.
  void mul(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const;
  Mat mul(const Mat& x, const Mat& y) const;
  Mat from_int(const IntMatrix& m) const;

  RingElem entry(const Mat& m, std::size_t i, std::size_t j) const;
  void set_entry(Mat& m, std::size_t i, std::size_t j, const RingElem& v) const;

  /// Entry-wise reduction modulo an ideal gives the identity.
  bool reduces_to_identity(const std::uint8_t* m, const Ideal& level) const;
  bool reduces_to_identity(const Mat& m, const Ideal& level) const { return reduces_to_identity(m.data(), level); }

  /// Determinant, computed exactly over Z on representatives and reduced.
  RingElem determinant(const Mat& m) const;
  /// m^T F m == F for the given integer form.
  bool preserves_form(const Mat& m, const IntMatrix& form) const;

  std::string format(const Mat& m) const;
  std::string describe() const;

 private:
  FiniteRing ring_;
  std::size_t n_;
};

/// A matrix together with its inverse.
struct GroupElem {
  Mat mat;
  Mat inv;

  friend bool operator==(const GroupElem& x, const GroupElem& y) { return x.mat == y.mat; }
};

/// Group of type Phi realized over a finite ring.
class Ambient {
 public:
  Ambient(SystemLabel label, FiniteRing ring);

  const ChevRep& rep() const { return rep_; }
  const RootSystem& system() const { return rep_.system(); }
  const MatrixSpace& space() const { return space_; }
  const FiniteRing& ring() const { return space_.ring(); }

  GroupElem identity() const;
  GroupElem x(std::size_t root, const RingElem& t) const;
  /// y_alpha(a, b) = [x_alpha(a), x_{-alpha}(b)]
  GroupElem y(std::size_t root, const RingElem& a, const RingElem& b) const;
  /// z_alpha(a, c) = x_{-alpha}(c) x_alpha(a) x_{-alpha}(-c)
  GroupElem z(std::size_t root, const RingElem& a, const RingElem& c) const;
  /// Evaluates a symbolic word under an assignment of its variables.
  GroupElem eval(const Word& w, const Assignment& assignment) const;

  GroupElem mul(const GroupElem& g, const GroupElem& h) const;
  GroupElem inverse(const GroupElem& g) const { return {g.inv, g.mat}; }
  /// [g, h] = g h g^-1 h^-1
  GroupElem commutator(const GroupElem& g, const GroupElem& h) const;
  /// ^g h = g h g^-1
  GroupElem conjugate(const GroupElem& g, const GroupElem& h) const;
  GroupElem power(const GroupElem& g, int k) const;

  std::string describe() const;

 private:
  Mat unipotent(std::size_t root, const RingElem& t) const;

  ChevRep rep_;
  MatrixSpace space_;
  std::vector<std::size_t> negatives_;
};

}  // namespace chevcomm
