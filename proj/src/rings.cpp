#include "chevcomm/rings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chevcomm {

namespace {

int reduce(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

}  // namespace

FiniteRing::FiniteRing(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("ring needs at least one modulus");
  for (int m : moduli_) {
    if (m < 2 || m > kMaxModulus) {
      throw std::invalid_argument("ring modulus " + std::to_string(m) + " outside [2, " +
                                  std::to_string(kMaxModulus) + "]");
    }
    size_ *= static_cast<std::size_t>(m);
  }
}

void FiniteRing::check(const RingElem& x) const {
  if (x.residues.size() != moduli_.size()) {
    throw std::invalid_argument("ring element has " + std::to_string(x.residues.size()) +
                                " residues, ring " + describe() + " expects " +
                                std::to_string(moduli_.size()));
  }
}

RingElem FiniteRing::zero() const { return RingElem{std::vector<int>(moduli_.size(), 0)}; }
RingElem FiniteRing::one() const { return RingElem{std::vector<int>(moduli_.size(), 1)}; }

RingElem FiniteRing::from_int(long long value) const {
  RingElem out;
  out.residues.reserve(moduli_.size());
  for (int m : moduli_) out.residues.push_back(reduce(value, m));
  return out;
}

RingElem FiniteRing::from_residues(std::vector<int> residues) const {
  RingElem out{std::move(residues)};
  check(out);
  for (std::size_t i = 0; i < moduli_.size(); ++i) out.residues[i] = reduce(out.residues[i], moduli_[i]);
  return out;
}

RingElem FiniteRing::add(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  RingElem out = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) out.residues[i] = (x.residues[i] + y.residues[i]) % moduli_[i];
  return out;
}

RingElem FiniteRing::neg(const RingElem& x) const {
  check(x);
  RingElem out = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) out.residues[i] = (moduli_[i] - x.residues[i]) % moduli_[i];
  return out;
}

RingElem FiniteRing::sub(const RingElem& x, const RingElem& y) const { return add(x, neg(y)); }

RingElem FiniteRing::mul(const RingElem& x, const RingElem& y) const {
  check(x);
  check(y);
  RingElem out = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) out.residues[i] = (x.residues[i] * y.residues[i]) % moduli_[i];
  return out;
}

RingElem FiniteRing::pow(const RingElem& x, unsigned exponent) const {
  RingElem out = one();
  for (unsigned k = 0; k < exponent; ++k) out = mul(out, x);
  return out;
}

bool FiniteRing::is_zero(const RingElem& x) const {
  check(x);
  return std::all_of(x.residues.begin(), x.residues.end(), [](int r) { return r == 0; });
}

RingElem FiniteRing::element(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("ring element index out of range");
  RingElem out;
  out.residues.resize(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    out.residues[i] = static_cast<int>(index % moduli_[i]);
    index /= moduli_[i];
  }
  return out;
}

std::size_t FiniteRing::index_of(const RingElem& x) const {
  check(x);
  std::size_t index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    index = index * moduli_[i] + static_cast<std::size_t>(x.residues[i]);
  }
  return index;
}

std::vector<RingElem> FiniteRing::elements() const {
  std::vector<RingElem> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

std::string FiniteRing::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << moduli_[i];
  }
  return os.str();
}

std::string FiniteRing::format(const RingElem& x) const {
  check(x);
  if (x.residues.size() == 1) return std::to_string(x.residues[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    if (i) os << ',';
    os << x.residues[i];
  }
  os << ')';
  return os.str();
}

bool Ideal::contains(const RingElem& x) const { return member_[ring_.index_of(x)]; }

std::string Ideal::describe() const {
  std::ostringstream os;
  os << '(';
  if (generators_.empty()) os << '0';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << ring_.format(generators_[i]);
  }
  os << ')';
  return os.str();
}

Ideal ideal_from_generators(const FiniteRing& ring, std::vector<RingElem> gens) {
  Ideal ideal(ring);
  for (auto& g : gens) g = ring.from_residues(g.residues);
  ideal.generators_ = gens;
  ideal.member_.assign(ring.size(), false);

  const auto all = ring.elements();
  std::vector<RingElem> multiples;
  for (const auto& g : gens) {
    for (const auto& r : all) multiples.push_back(ring.mul(r, g));
  }

  std::deque<RingElem> queue;
  ideal.member_[ring.index_of(ring.zero())] = true;
  queue.push_back(ring.zero());
  std::size_t count = 1;
  while (!queue.empty()) {
    RingElem x = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : multiples) {
      RingElem y = ring.add(x, m);
      const std::size_t idx = ring.index_of(y);
      if (!ideal.member_[idx]) {
        ideal.member_[idx] = true;
        queue.push_back(std::move(y));
        if (++count > ring.size()) throw std::logic_error("ideal closure exceeded ring size");
      }
    }
  }

  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (ideal.member_[i]) ideal.elements_.push_back(ring.element(i));
  }

  ideal.levels_.assign(ring.components(), 0);
  std::size_t expected = 1;
  for (std::size_t c = 0; c < ring.components(); ++c) {
    int d = ring.moduli()[c];
    for (const auto& x : ideal.elements_) d = std::gcd(d, x.residues[c]);
    ideal.levels_[c] = d;
    expected *= static_cast<std::size_t>(ring.moduli()[c] / d);
  }
  if (expected != ideal.elements_.size()) {
    throw std::logic_error("ideal of " + ring.describe() + " is not a product of component ideals");
  }
  return ideal;
}

Ideal zero_ideal(const FiniteRing& ring) { return ideal_from_generators(ring, {}); }
Ideal unit_ideal(const FiniteRing& ring) { return ideal_from_generators(ring, {ring.one()}); }
Ideal principal_ideal(const FiniteRing& ring, long long generator) {
  return ideal_from_generators(ring, {ring.from_int(generator)});
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) {
    throw std::invalid_argument("ideal product over different rings " + a.ring().describe() +
                                " and " + b.ring().describe());
  }
  return ideal_from_generators(a.ring(), elementwise_products(a, b));
}

std::vector<RingElem> elementwise_products(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("elementwise products over different rings");
  const auto& ring = a.ring();
  std::vector<bool> seen(ring.size(), false);
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) seen[ring.index_of(ring.mul(x, y))] = true;
  }
  std::vector<RingElem> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (seen[i]) out.push_back(ring.element(i));
  }
  return out;
}

bool has_residue_field_of_two(const FiniteRing& ring) {
  if (ring.size() % 2 != 0) return false;
  const auto all = ring.elements();
  for (const auto& x : all) {
    std::vector<bool> seen(ring.size(), false);
    std::size_t count = 0;
    for (const auto& r : all) {
      const std::size_t idx = ring.index_of(ring.mul(x, r));
      if (!seen[idx]) {
        seen[idx] = true;
        ++count;
      }
    }
    if (2 * count == ring.size()) return true;
  }
  return false;
}

ConditionStar check_condition_star(const FiniteRing& ring, const SystemLabel& label) {
  ConditionStar out;
  if (label.family == Family::A) return out;

  const bool rank_two_special = label.rank == 2;  // C2 and G2
  if (rank_two_special && has_residue_field_of_two(ring)) {
    out.holds = false;
    out.diagnostic = ring.describe() + " has a residue field of two elements (excluded for " + label.str() + ")";
    return out;
  }
  if (label.family == Family::C) {
    for (const auto& c : ring.elements()) {
      const Ideal span = ideal_from_generators(ring, {ring.mul(c, c), ring.add(c, c)});
      if (!span.contains(c)) {
        out.holds = false;
        out.diagnostic = "c = " + ring.format(c) + " is not in c^2 R + 2c R over " + ring.describe();
        return out;
      }
    }
  }
  return out;
}

}  // namespace chevcomm
