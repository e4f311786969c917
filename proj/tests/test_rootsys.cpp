#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "chevcomm/rootsys.hpp"

using namespace chevcomm;

namespace {

const RootSystem& sys(const char* name) {
  static std::map<std::string, RootSystem> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, RootSystem(SystemLabel::parse(name))).first;
  return it->second;
}

std::set<Root> orbit(const RootSystem& s, const Root& start) {
  std::set<Root> seen{start};
  std::vector<Root> todo{start};
  while (!todo.empty()) {
    const Root r = todo.back();
    todo.pop_back();
    for (int k = 1; k <= s.rank(); ++k) {
      const Root w = s.reflect(r, k);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(SystemLabel::parse("A_3").str() == "A3");
  CHECK(SystemLabel::parse("G2").family == Family::G);
  CHECK_THROWS_AS(SystemLabel::parse("B3"), std::invalid_argument);
  CHECK_THROWS_AS(SystemLabel::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(SystemLabel::parse("A1"), std::invalid_argument);
}

TEST_CASE("root counts and length classes") {
  for (int l = 2; l <= 5; ++l) {
    const RootSystem a(SystemLabel{Family::A, l});
    CHECK(a.size() == static_cast<std::size_t>(l * (l + 1)));
    const RootSystem c(SystemLabel{Family::C, l});
    CHECK(c.size() == static_cast<std::size_t>(2 * l * l));
    std::size_t longs = 0;
    for (const auto& r : c.roots()) longs += r.is_long() ? 1 : 0;
    CHECK(longs == static_cast<std::size_t>(2 * l));
  }
  CHECK(sys("G2").size() == 12);
  std::size_t g2_long = 0;
  for (const auto& r : sys("G2").roots()) g2_long += r.is_long() ? 1 : 0;
  CHECK(g2_long == 6);
  for (const auto& r : sys("A3").roots()) CHECK(r.is_long());
}

TEST_CASE("fundamental roots") {
  CHECK(sys("C2").fundamentals()[0].coords == std::vector<int>{1, -1});
  CHECK(sys("C2").fundamentals()[1].coords == std::vector<int>{0, 2});
  CHECK_FALSE(sys("G2").fundamentals()[0].is_long());
  CHECK(sys("G2").fundamentals()[1].is_long());
  CHECK(sys("G2").fundamentals()[1].coords == std::vector<int>{-2, 1, 1});
}

TEST_CASE("root system is closed under negation and reflections") {
  for (const char* name : {"A2", "A3", "C2", "C3", "G2"}) {
    const RootSystem& s = sys(name);
    for (const auto& r : s.roots()) {
      CHECK(s.contains(s.negate(r).coords));
      for (int k = 1; k <= s.rank(); ++k) {
        const Root w = s.reflect(r, k);
        CHECK(w.is_long() == r.is_long());
      }
      int positive = 0;
      for (int c : s.fundamental_coefficients(r)) positive += c > 0 ? 1 : (c < 0 ? -1 : 0);
      CHECK(s.is_positive(r) == (positive > 0));
    }
  }
}

TEST_CASE("root sums") {
  const RootSystem& a2 = sys("A2");
  const auto& f = a2.fundamentals();
  CHECK(a2.add_roots(f[0], f[1])->coords == std::vector<int>{1, 0, -1});
  CHECK_FALSE(a2.add_roots(f[0], f[0]).has_value());
  const RootSystem& g2 = sys("G2");
  const Root& s = g2.fundamentals()[0];
  const Root& l = g2.fundamentals()[1];
  CHECK(g2.height(l) == 1);
  CHECK(g2.add_roots(s, l).has_value());
  CHECK_FALSE(g2.add_roots(l, l).has_value());
}

TEST_CASE("root strings") {
  const RootSystem& c2 = sys("C2");
  // long alpha = 2e2, short beta = e1 - e2: alpha+beta, alpha+2beta
  const auto str = c2.root_string(c2.fundamentals()[1], c2.fundamentals()[0]);
  REQUIRE(str.size() == 2);
  CHECK(str[0].i == 1);
  CHECK(str[0].j == 1);
  CHECK(str[1].i == 1);
  CHECK(str[1].j == 2);
  const RootSystem& g2 = sys("G2");
  const auto g = g2.root_string(g2.fundamentals()[0], g2.fundamentals()[1]);
  CHECK(g.size() == 4);
  CHECK(sys("A2").root_string(sys("A2").fundamentals()[0], sys("A2").fundamentals()[1]).size() == 1);
  CHECK_THROWS(c2.root_string(c2.fundamentals()[0], c2.negate(c2.fundamentals()[0])));
  // orthogonal long roots have an empty string
  CHECK(c2.root_string(c2.root({2, 0}), c2.root({0, 2})).empty());
}

TEST_CASE("root string members are roots and none are missed") {
  for (const char* name : {"A3", "C3", "G2"}) {
    const RootSystem& s = sys(name);
    for (const auto& a : s.roots()) {
      for (const auto& b : s.roots()) {
        if (s.proportional(a, b)) continue;
        std::size_t expected = 0;
        for (int i = 1; i <= 3; ++i) {
          for (int j = 1; j <= 3; ++j) {
            std::vector<int> v(a.coords.size());
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = i * a.coords[k] + j * b.coords[k];
            expected += s.contains(v) ? 1 : 0;
          }
        }
        CHECK(s.root_string(a, b).size() == expected);
      }
    }
  }
}

TEST_CASE("unipotent radicals are closed under root addition") {
  for (const char* name : {"A3", "C2", "C3", "G2"}) {
    const RootSystem& s = sys(name);
    for (int r = 1; r <= s.rank(); ++r) {
      const ParabolicData p = s.parabolic_data(r);
      CHECK(p.unipotent.size() + p.opposite.size() + 2 == s.size());
      std::set<Root> u(p.unipotent.begin(), p.unipotent.end());
      for (const auto& x : p.unipotent) {
        for (const auto& y : p.unipotent) {
          if (auto z = s.add_roots(x, y)) CHECK(u.count(*z) == 1);
        }
        // conjugation by the Levi roots keeps U_r
        for (const Root& l : {p.levi.first, p.levi.second}) {
          if (auto z = s.add_roots(x, l)) CHECK(u.count(*z) == 1);
        }
      }
    }
  }
}

TEST_CASE("every root is conjugate to a fundamental root of its length") {
  for (const char* name : {"A3", "C2", "C3", "G2"}) {
    const RootSystem& s = sys(name);
    for (const auto& r : s.roots()) {
      const auto orb = orbit(s, r);
      bool hit = false;
      for (const auto& f : s.fundamentals()) hit = hit || (orb.count(f) && f.is_long() == r.is_long());
      CHECK(hit);
    }
  }
  // the long orbit of C2 is {+-2e1, +-2e2}, computed outside the library
  const auto orb = orbit(sys("C2"), sys("C2").root({0, 2}));
  std::vector<std::vector<int>> coords;
  for (const auto& r : orb) coords.push_back(r.coords);
  CHECK(coords == std::vector<std::vector<int>>{{-2, 0}, {0, -2}, {0, 2}, {2, 0}});
}

TEST_CASE("rank-two embeddings") {
  const RootSystem& c3 = sys("C3");
  const auto e = c3.embed_rank2(c3.root({1, -1, 0}), c3.root({0, 1, -1}));
  CHECK(e.type == "A2");
  CHECK(e.roots.size() == 6);
  const RootSystem& c2 = sys("C2");
  CHECK(c2.embed_rank2(c2.root({0, 2}), c2.root({1, -1})).type == "C2");
  CHECK_THROWS_AS(c2.embed_rank2(c2.root({0, 2}), c2.root({0, -2})), std::invalid_argument);
  const RootSystem& a3 = sys("A3");
  CHECK(a3.embed_rank2(a3.root({1, -1, 0, 0}), a3.root({0, 0, 1, -1})).type == "A1xA1");
}

TEST_CASE("exhaustive G2 and C2 pair scans") {
  // Counts from an integer-span scan over the 120 (G2) and 48 (C2) ordered
  // non-proportional pairs, computed outside the library.
  const std::map<std::string, int> g2_expected{{"A1xA1", 24}, {"A2", 24}, {"G2", 72}};
  const std::map<std::string, int> c2_expected{{"A1xA1", 8}, {"C2", 40}};
  for (const auto& [name, expected] : {std::pair{"G2", g2_expected}, std::pair{"C2", c2_expected}}) {
    const RootSystem& s = sys(name);
    std::map<std::string, int> counts;
    for (const auto& a : s.roots()) {
      for (const auto& b : s.roots()) {
        if (s.proportional(a, b)) continue;
        const auto e = s.embed_rank2(a, b);
        ++counts[e.type];
        if (a.is_long() && b.is_long()) CHECK(e.type == (name == std::string("G2") ? "A2" : "A1xA1"));
        // symmetric up to the embedding data
        const auto f = s.embed_rank2(b, a);
        CHECK(f.type == e.type);
        CHECK(std::set<Root>(f.roots.begin(), f.roots.end()) == std::set<Root>(e.roots.begin(), e.roots.end()));
        // the images recover the inputs
        std::vector<int> back(a.coords.size());
        for (std::size_t k = 0; k < back.size(); ++k) {
          back[k] = e.alpha_coords.first * e.first.coords[k] + e.alpha_coords.second * e.second.coords[k];
        }
        CHECK(back == a.coords);
      }
    }
    CHECK(counts == expected);
  }
}
