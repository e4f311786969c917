#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chevcomm/chevrep.hpp"
#include "chevcomm/poly.hpp"
#include "chevcomm/word.hpp"

namespace chevcomm {

/// Square matrix over MultiPoly.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}
  static PolyMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  bool is_identity() const;

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<MultiPoly> a_;
};

/// exp(t * e_alpha), exact.
PolyMatrix unipotent(const ChevRep& rep, std::size_t root, const MultiPoly& t);
PolyMatrix evaluate(const ChevRep& rep, const Word& w);

struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  MultiPoly lhs;
  MultiPoly rhs;
  std::string str() const;
};

struct IdentityCheck {
  bool equal = true;
  Mismatch witness;  ///< first differing entry in row-major order when !equal
};

IdentityCheck compare(const PolyMatrix& lhs, const PolyMatrix& rhs);
IdentityCheck verify_identity(const ChevRep& rep, const Word& lhs, const Word& rhs);

/// One factor x_{i alpha + j beta}(N a^i b^j) of a commutator expansion.
struct StructureConstant {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  int i = 0;
  int j = 0;
  std::size_t root = 0;
  long long value = 0;
};

/// Constants N_{alpha beta i j} in root_string order, extracted by peeling
/// the factors of the symbolic commutator [x_alpha(a), x_beta(b)] from the
/// left. Throws std::logic_error when the commutator is not of that shape.
std::vector<StructureConstant> pair_constants(const ChevRep& rep, std::size_t alpha, std::size_t beta);

/// Constants for every ordered pair of non-proportional roots.
std::vector<StructureConstant> structure_constants(const ChevRep& rep);

/// Right-hand side of the commutator formula for [x_alpha(a), x_beta(b)].
Word chevalley_expand(const ChevRep& rep, std::size_t alpha, std::size_t beta, const MultiPoly& a,
                      const MultiPoly& b);

}  // namespace chevcomm
