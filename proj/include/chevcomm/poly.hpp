#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chevcomm/rings.hpp"

namespace chevcomm {

/// Graded lexicographic order on exponent vectors (total degree first).
struct GradedLex {
  bool operator()(const std::vector<unsigned>& x, const std::vector<unsigned>& y) const;
};

/// Polynomial in named variables with arbitrary-precision integer coefficients.
///
/// Canonical form: the variable list is sorted and contains only variables
/// that occur in some term, and no stored coefficient is zero. Equal
/// polynomials therefore compare equal member by member.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, mpz_class, GradedLex>;

  MultiPoly() = default;
  MultiPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const mpz_class& constant);
  MultiPoly(std::vector<std::string> variables, Terms terms);

  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Constant term value (zero when absent).
  mpz_class constant_term() const;
  /// Coefficient of a monomial given as variable -> exponent (absent means 0).
  mpz_class coefficient(const std::map<std::string, unsigned>& monomial) const;
  unsigned total_degree() const;

  MultiPoly operator-() const;
  MultiPoly pow(unsigned exponent) const;

  friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  MultiPoly& operator+=(const MultiPoly& y) { return *this = *this + y; }
  MultiPoly& operator*=(const MultiPoly& y) { return *this = *this * y; }

  /// Terms in decreasing graded-lex order, e.g. "2*a^3*b^2 - 3*a*b + 1".
  std::string str() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void normalize();

  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly poly_add(const MultiPoly& x, const MultiPoly& y);
MultiPoly poly_sub(const MultiPoly& x, const MultiPoly& y);
MultiPoly poly_mul(const MultiPoly& x, const MultiPoly& y);
MultiPoly poly_neg(const MultiPoly& x);

using Assignment = std::map<std::string, RingElem>;

/// Image under the homomorphism Z[vars] -> ring fixed by the assignment.
/// Throws std::invalid_argument for an unassigned variable.
RingElem poly_eval(const MultiPoly& p, const Assignment& assignment, const FiniteRing& ring);

/// Parses "-a*c^2", "2a^2c^3 + 1", "-(a+b)*3cb". A variable is one letter
/// optionally followed by digits; juxtaposition multiplies.
MultiPoly parse_poly(std::string_view text);

}  // namespace chevcomm
