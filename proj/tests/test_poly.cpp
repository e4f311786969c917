#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chevcomm/poly.hpp"

using namespace chevcomm;

namespace {

MultiPoly random_poly(std::mt19937_64& rng) {
  const std::vector<std::string> vars{"a", "b", "c"};
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, 3), terms(0, 4);
  MultiPoly p;
  for (int t = terms(rng); t > 0; --t) {
    MultiPoly m(coef(rng));
    for (const auto& v : vars) m *= MultiPoly::variable(v).pow(static_cast<unsigned>(deg(rng)));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(parse_poly("2a^2c^3 + 1").str() == "2*a^2*c^3 + 1");
  CHECK(parse_poly("-a*c^2") == -(MultiPoly::variable("a") * MultiPoly::variable("c").pow(2)));
  CHECK(parse_poly("-(a+b)*3cb") == parse_poly("-3abc - 3b^2c"));
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("a - a").is_zero());
  CHECK(parse_poly("a - a").variables().empty());
  CHECK_THROWS(parse_poly("a +"));
  CHECK_THROWS(parse_poly("(a"));
}

TEST_CASE("coefficients and degree") {
  const MultiPoly p = parse_poly("2a^3b^2 - 3ab + 7");
  CHECK(p.coefficient({{"a", 3}, {"b", 2}}) == 2);
  CHECK(p.coefficient({{"a", 1}, {"b", 1}}) == -3);
  CHECK(p.constant_term() == 7);
  CHECK(p.total_degree() == 5);
  CHECK(p.str() == "2*a^3*b^2 - 3*a*b + 7");
}

TEST_CASE("big coefficients do not overflow") {
  const MultiPoly p = MultiPoly(1000000007LL).pow(4);
  CHECK(p.constant_term() == mpz_class("1000000028000000294000001372000002401"));
}

TEST_CASE("commutative ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == MultiPoly());
    CHECK(x * MultiPoly(1) == x);
    CHECK(parse_poly(x.str()) == x);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(9);
  for (const auto& moduli : std::vector<std::vector<int>>{{8}, {27}, {6, 4}}) {
    const FiniteRing ring(moduli);
    std::uniform_int_distribution<std::size_t> pick(0, ring.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const MultiPoly x = random_poly(rng), y = random_poly(rng);
      const Assignment as{{"a", ring.element(pick(rng))}, {"b", ring.element(pick(rng))}, {"c", ring.element(pick(rng))}};
      CHECK(poly_eval(x + y, as, ring) == ring.add(poly_eval(x, as, ring), poly_eval(y, as, ring)));
      CHECK(poly_eval(x * y, as, ring) == ring.mul(poly_eval(x, as, ring), poly_eval(y, as, ring)));
      CHECK(poly_eval(-x, as, ring) == ring.neg(poly_eval(x, as, ring)));
    }
  }
}

TEST_CASE("evaluation needs every variable") {
  const FiniteRing z8({8});
  CHECK_THROWS_AS(poly_eval(parse_poly("a*b"), {{"a", z8.one()}}, z8), std::invalid_argument);
  CHECK(poly_eval(parse_poly("3a^2 - 1"), {{"a", z8.from_int(3)}}, z8) == z8.from_int(26));
}
