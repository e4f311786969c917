#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "chevcomm/rings.hpp"

using namespace chevcomm;

namespace {

RingElem pair(const FiniteRing& r, int x, int y) { return r.from_residues({x, y}); }

// Ideal generated by random elements of a random small product ring.
Ideal random_ideal(const FiniteRing& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, ring.size() - 1);
  std::vector<RingElem> gens;
  for (int k = 0; k < 2; ++k) gens.push_back(ring.element(pick(rng)));
  return ideal_from_generators(ring, gens);
}

}  // namespace

TEST_CASE("ring arithmetic in Z/6 x Z/4") {
  const FiniteRing r({6, 4});
  CHECK(r.size() == 24);
  CHECK(r.add(pair(r, 5, 3), pair(r, 2, 2)) == pair(r, 1, 1));
  CHECK(r.mul(pair(r, 5, 3), pair(r, 2, 2)) == pair(r, 4, 2));
  CHECK(r.neg(pair(r, 1, 0)) == pair(r, 5, 0));
  CHECK(r.from_int(-1) == pair(r, 5, 3));
  CHECK(r.pow(pair(r, 2, 3), 3) == pair(r, 2, 3));
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(r.index_of(r.element(i)) == i);
}

TEST_CASE("moduli are validated") {
  CHECK_THROWS_AS(FiniteRing({1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteRing({257}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteRing(std::vector<int>{}), std::invalid_argument);
  CHECK_NOTHROW(FiniteRing({256}));
}

TEST_CASE("ideal examples") {
  const FiniteRing z4({4});
  CHECK(principal_ideal(z4, 2).elements() == std::vector<RingElem>{z4.from_int(0), z4.from_int(2)});
  const FiniteRing z8({8});
  CHECK(principal_ideal(z8, 2).size() == 4);
  CHECK(principal_ideal(z8, 6) == principal_ideal(z8, 2));
  CHECK(zero_ideal(z8).is_zero());
  CHECK(unit_ideal(z8).is_whole_ring());
}

TEST_CASE("ideal generated by (3,2) in Z/6 x Z/4") {
  // Brute-force closure under +, - and ring multiplication, computed outside the library.
  const FiniteRing r({6, 4});
  const Ideal i = ideal_from_generators(r, {pair(r, 3, 2)});
  const std::vector<RingElem> expected{pair(r, 0, 0), pair(r, 0, 2), pair(r, 3, 0), pair(r, 3, 2)};
  std::vector<RingElem> got = i.elements();
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  CHECK(i.component_levels() == std::vector<int>{3, 2});
}

TEST_CASE("ideal products") {
  const FiniteRing z8({8});
  const Ideal two = principal_ideal(z8, 2);
  CHECK(ideal_product(two, two) == principal_ideal(z8, 4));
  CHECK(ideal_product(two, principal_ideal(z8, 4)).is_zero());
  const FiniteRing z9({9});
  CHECK(ideal_product(principal_ideal(z9, 3), principal_ideal(z9, 3)).is_zero());
  const FiniteRing z27({27});
  CHECK(ideal_product(principal_ideal(z27, 3), principal_ideal(z27, 3)) == principal_ideal(z27, 9));
}

TEST_CASE("ideal product is commutative, contained in both factors, and R*I = I") {
  std::mt19937_64 rng(11);
  for (const auto& moduli : std::vector<std::vector<int>>{{8}, {12}, {6, 4}, {9, 2}, {27}}) {
    const FiniteRing ring(moduli);
    for (int trial = 0; trial < 20; ++trial) {
      const Ideal a = random_ideal(ring, rng);
      const Ideal b = random_ideal(ring, rng);
      const Ideal ab = ideal_product(a, b);
      CHECK(ab == ideal_product(b, a));
      for (const auto& x : ab.elements()) {
        CHECK(a.contains(x));
        CHECK(b.contains(x));
      }
      CHECK(ideal_product(unit_ideal(ring), a) == a);
      CHECK(ring.size() % a.size() == 0);
      for (const auto& x : elementwise_products(a, b)) CHECK(ab.contains(x));
    }
  }
}

TEST_CASE("residue field of two elements") {
  for (int m = 2; m <= 60; ++m) {
    CAPTURE(m);
    CHECK(has_residue_field_of_two(FiniteRing({m})) == (m % 2 == 0));
  }
  CHECK(has_residue_field_of_two(FiniteRing({9, 4})));
  CHECK_FALSE(has_residue_field_of_two(FiniteRing({9, 25})));
}

TEST_CASE("condition (*)") {
  const auto a2 = SystemLabel::parse("A2");
  const auto c2 = SystemLabel::parse("C2");
  const auto g2 = SystemLabel::parse("G2");
  CHECK(check_condition_star(FiniteRing({4}), a2).holds);
  CHECK_FALSE(check_condition_star(FiniteRing({4}), c2).holds);
  CHECK_FALSE(check_condition_star(FiniteRing({8}), g2).holds);
  // Every c in Z/27 lies in c^2 R + 2c R: enumerated outside the library.
  CHECK(check_condition_star(FiniteRing({27}), c2).holds);
  CHECK(check_condition_star(FiniteRing({9}), c2).holds);
  CHECK(check_condition_star(FiniteRing({25}), SystemLabel::parse("C3")).holds);
  CHECK(check_condition_star(FiniteRing({9}), g2).holds);
  const ConditionStar bad = check_condition_star(FiniteRing({4}), c2);
  CHECK(bad.diagnostic.find("residue field") != std::string::npos);
}
