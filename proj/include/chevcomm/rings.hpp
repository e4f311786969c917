#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "chevcomm/system_label.hpp"

namespace chevcomm {

/// Largest modulus a ring component may have; residues are stored in one byte
/// inside enumeration kernels.
inline constexpr int kMaxModulus = 256;

/// Element of a finite product ring Z/m_1 x ... x Z/m_k, one residue per factor.
struct RingElem {
  std::vector<int> residues;

  friend bool operator==(const RingElem&, const RingElem&) = default;
  friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// Finite commutative ring Z/m_1 x ... x Z/m_k with componentwise operations.
class FiniteRing {
 public:
  explicit FiniteRing(std::vector<int> moduli);

  const std::vector<int>& moduli() const { return moduli_; }
  std::size_t components() const { return moduli_.size(); }
  std::size_t size() const { return size_; }

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(long long value) const;
  RingElem from_residues(std::vector<int> residues) const;

  RingElem add(const RingElem& x, const RingElem& y) const;
  RingElem sub(const RingElem& x, const RingElem& y) const;
  RingElem neg(const RingElem& x) const;
  RingElem mul(const RingElem& x, const RingElem& y) const;
  RingElem pow(const RingElem& x, unsigned exponent) const;
  bool is_zero(const RingElem& x) const;

  /// Mixed-radix enumeration; element(index_of(x)) == x.
  RingElem element(std::size_t index) const;
  std::size_t index_of(const RingElem& x) const;
  std::vector<RingElem> elements() const;

  std::string describe() const;
  std::string format(const RingElem& x) const;

  friend bool operator==(const FiniteRing&, const FiniteRing&) = default;

 private:
  void check(const RingElem& x) const;

  std::vector<int> moduli_;
  std::size_t size_ = 1;
};

/// An ideal with its full element set enumerated.
class Ideal {
 public:
  const FiniteRing& ring() const { return ring_; }
  const std::vector<RingElem>& generators() const { return generators_; }
  /// Elements in ring-index order.
  const std::vector<RingElem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const RingElem& x) const;
  bool is_zero() const { return elements_.size() == 1; }
  bool is_whole_ring() const { return elements_.size() == ring_.size(); }

  /// Per-component divisors d_i with ideal = prod d_i * Z/m_i (d_i divides m_i).
  const std::vector<int>& component_levels() const { return levels_; }

  std::string describe() const;

  friend bool operator==(const Ideal& x, const Ideal& y) {
    return x.ring_ == y.ring_ && x.elements_ == y.elements_;
  }

 private:
  friend Ideal ideal_from_generators(const FiniteRing& ring, std::vector<RingElem> gens);
  explicit Ideal(FiniteRing ring) : ring_(std::move(ring)) {}

  FiniteRing ring_;
  std::vector<RingElem> generators_;
  std::vector<RingElem> elements_;
  std::vector<bool> member_;
  std::vector<int> levels_;
};

/// Smallest ideal containing gens; an empty list gives the zero ideal.
Ideal ideal_from_generators(const FiniteRing& ring, std::vector<RingElem> gens);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);
Ideal principal_ideal(const FiniteRing& ring, long long generator);

/// Ideal generated by all products ab, a in A, b in B.
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// The set {ab : a in A, b in B} itself (not its ideal closure), sorted.
std::vector<RingElem> elementwise_products(const Ideal& a, const Ideal& b);

/// True iff some maximal ideal has residue field of two elements, found by
/// scanning all principal ideals for one of index 2.
bool has_residue_field_of_two(const FiniteRing& ring);

struct ConditionStar {
  bool holds = true;
  std::string diagnostic;
};

/// Umbrella hypothesis on (ring, type): for C2 and G2 no residue field of two
/// elements; for every C_l also c in c^2 R + 2cR for all c. Always holds for A_l.
ConditionStar check_condition_star(const FiniteRing& ring, const SystemLabel& label);

}  // namespace chevcomm
