#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "chevcomm/rootsys.hpp"

namespace chevcomm {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : n(dim), a(dim * dim, 0) {}
  static IntMatrix identity(std::size_t dim);

  long long& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  long long operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  IntMatrix scaled(long long s) const;
  IntMatrix transposed() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

enum class FormKind { None, Symplectic, Symmetric };

/// Matrix realization of a Chevalley group of type A_l (SL(l+1)), C_l
/// (Sp(2l), antidiagonal form) or G2 (seven-dimensional representation).
///
/// x_alpha(t) = sum_k t^k * exp_terms(alpha)[k], with exp_terms[0] = identity
/// and exp_terms[k] = e_alpha^k / k!.
class ChevRep {
 public:
  explicit ChevRep(SystemLabel label);

  const RootSystem& system() const { return system_; }
  std::size_t dimension() const { return dim_; }

  /// Chevalley basis element e_alpha (sign convention already applied).
  const IntMatrix& pattern(std::size_t root_index) const { return exp_terms_.at(root_index).at(1); }
  const IntMatrix& pattern(const Root& root) const { return pattern(system_.index_of(root)); }
  const std::vector<IntMatrix>& exp_terms(std::size_t root_index) const { return exp_terms_.at(root_index); }
  /// Nilpotency index: smallest k with e_alpha^k = 0.
  std::size_t nilpotency(std::size_t root_index) const { return exp_terms_.at(root_index).size(); }

  /// Sign applied to the natural basis element of each root (+1 or -1).
  const std::vector<int>& sign_convention() const { return signs_; }

  FormKind form_kind() const { return form_kind_; }
  /// Invariant bilinear form F with g^T F g = F (empty for type A).
  const IntMatrix& form() const { return form_; }

  std::string describe() const;

 private:
  void build_a();
  void build_c();
  void build_g2();
  void finish(const std::vector<IntMatrix>& raw_patterns);

  RootSystem system_;
  std::size_t dim_ = 0;
  std::vector<int> signs_;
  std::vector<std::vector<IntMatrix>> exp_terms_;
  FormKind form_kind_ = FormKind::None;
  IntMatrix form_;
};

}  // namespace chevcomm
