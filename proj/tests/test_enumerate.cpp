#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>

#include "chevcomm/enumerate.hpp"
#include "chevcomm/subgroups.hpp"

using namespace chevcomm;

namespace {

std::size_t root_of(const Ambient& amb, std::vector<int> coords) { return amb.system().index_of(amb.system().root(coords)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("element set") {
  ElementSet s(3);
  const std::uint8_t a[3] = {1, 2, 3}, b[3] = {1, 2, 4};
  CHECK(s.insert(a));
  CHECK_FALSE(s.insert(a));
  CHECK(s.insert(b));
  CHECK(s.contains(a));
  CHECK(s.size() == 2);
  for (int i = 0; i < 5000; ++i) {
    const std::uint8_t k[3] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(i >> 8), 7};
    s.insert(k);
  }
  CHECK(s.size() == 5002);
  const auto sorted = s.sorted();
  CHECK(std::is_sorted(sorted.begin(), sorted.end()));
}

TEST_CASE("trivial and cyclic subgroups") {
  const Ambient amb(SystemLabel::parse("A2"), FiniteRing({4}));
  CHECK(closure(amb.space(), {}).size() == 1);
  CHECK(closure(amb.space(), {amb.identity()}).size() == 1);
  const GroupElem x = amb.x(root_of(amb, {1, -1, 0}), amb.ring().one());
  CHECK(closure(amb.space(), {x}).size() == 4);
}

TEST_CASE("order of SL(3, Z/4)") {
  // 168 * 2^8, also recounted by a separate breadth-first search outside the library
  const Ambient amb(SystemLabel::parse("A2"), FiniteRing({4}));
  const auto g = closure(amb.space(), absolute_generators(amb));
  CHECK(g.size() == 43008);
  CHECK(g.complete());
}

TEST_CASE("parallel closure agrees with the serial reference") {
  std::mt19937_64 rng(2);
  for (const auto& [name, m] : {std::pair{"A2", 4}, std::pair{"C2", 3}, std::pair{"A2", 6}}) {
    const Ambient amb(SystemLabel::parse(name), FiniteRing({m}));
    const auto abs = absolute_generators(amb);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<GroupElem> gens;
      for (int k = 0; k < 2; ++k) gens.push_back(random_word(amb, abs, 3, rng));
      ClosureOptions serial;
      serial.parallel = false;
      ClosureOptions parallel;
      parallel.batch = 7;
      const auto x = closure(amb.space(), gens, parallel);
      const auto y = closure(amb.space(), gens, serial);
      const auto ref = reference_closure(amb.space(), gens);
      const auto xs = x.sorted_elements();
      CHECK(xs == std::vector<Mat>(ref.begin(), ref.end()));
      CHECK(xs == y.sorted_elements());
    }
  }
}

TEST_CASE("closure is closed under products and inverses") {
  std::mt19937_64 rng(4);
  const Ambient amb(SystemLabel::parse("C2"), FiniteRing({9}));
  const auto e = elementary_subgroup(amb, principal_ideal(amb.ring(), 3));
  std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Mat x = e.elements().get(pick(rng));
    const Mat y = e.elements().get(pick(rng));
    CHECK(e.member(amb.space().mul(x, y)));
  }
  CHECK(e.size() == 6561);  // the whole level-3 kernel of Sp(4, Z/9)
}

TEST_CASE("orders of elementary and relative subgroups") {
  // Orders recomputed by breadth-first search outside the library.
  const Ambient z4(SystemLabel::parse("A2"), FiniteRing({4}));
  const Ideal two = principal_ideal(z4.ring(), 2);
  const auto e2 = elementary_subgroup(z4, two);
  CHECK(e2.size() == 64);
  for (std::size_t i = 0; i < e2.size(); ++i) CHECK(z4.space().reduces_to_identity(e2.elements().at(i), two));
  CHECK(relative_elementary(z4, two).size() == 256);

  const Ambient z8(SystemLabel::parse("A2"), FiniteRing({8}));
  const Ideal four = principal_ideal(z8.ring(), 4);
  CHECK(elementary_subgroup(z8, four).size() == 64);
  const auto er4 = relative_elementary(z8, four);
  CHECK(er4.size() == 256);
  for (std::size_t i = 0; i < er4.size(); ++i) CHECK(z8.space().reduces_to_identity(er4.elements().at(i), four));
  CHECK(elementary_subgroup(z8, principal_ideal(z8.ring(), 2)).size() == 16384);
}

TEST_CASE("Sp(4, Z/27) at level 9") {
  const Ambient amb(SystemLabel::parse("C2"), FiniteRing({27}));
  const Ideal nine = principal_ideal(amb.ring(), 9);
  const auto e = elementary_subgroup(amb, nine);
  const auto r = relative_elementary(amb, nine);
  CHECK(e.size() == 6561);
  CHECK(r.size() == 59049);
  CHECK(e.subset_of(r));
  CHECK_FALSE(r.subset_of(e));
}

TEST_CASE("Lagrange") {
  const Ambient amb(SystemLabel::parse("A2"), FiniteRing({8}));
  const auto g = elementary_subgroup(amb, principal_ideal(amb.ring(), 2));
  for (long long d : {4, 0}) {
    const auto h = relative_elementary(amb, principal_ideal(amb.ring(), d));
    CHECK(h.subset_of(g));
    CHECK(g.size() % h.size() == 0);
  }
}

TEST_CASE("membership and congruence") {
  const Ambient amb(SystemLabel::parse("A2"), FiniteRing({4}));
  const Ideal two = principal_ideal(amb.ring(), 2);
  const auto e2 = elementary_subgroup(amb, two);
  const std::size_t r = root_of(amb, {1, -1, 0});
  CHECK_FALSE(e2.member(amb.x(r, amb.ring().one())));
  CHECK(e2.member(amb.x(r, amb.ring().from_int(2))));
  CHECK(congruence_kernel_member(amb.space(), amb.x(r, amb.ring().from_int(2)), two));
  CHECK_FALSE(congruence_kernel_member(amb.space(), amb.x(r, amb.ring().one()), two));
  const GroupElem g = amb.x(r, amb.ring().one());
  CHECK(congruent(amb.space(), amb.mul(g, amb.x(r, amb.ring().from_int(2))), g, e2));
  CHECK_FALSE(congruent(amb.space(), amb.mul(g, g), g, e2));
}

TEST_CASE("budget exhaustion is reported, never silently certified") {
  const Ambient amb(SystemLabel::parse("A2"), FiniteRing({4}));
  ClosureOptions opts;
  opts.budget = 1000;
  const auto g = closure(amb.space(), absolute_generators(amb), opts);
  CHECK_FALSE(g.complete());
  CHECK_THROWS_AS(g.member(amb.identity()), IncompleteSubgroupError);
  CHECK_THROWS_AS(congruent(amb.space(), amb.identity(), amb.identity(), g), IncompleteSubgroupError);
}

TEST_CASE("escape from the congruence kernel raises") {
  const Ambient amb(SystemLabel::parse("A2"), FiniteRing({4}));
  ClosureOptions opts;
  opts.level = principal_ideal(amb.ring(), 2);
  CHECK_THROWS_AS(closure(amb.space(), {amb.x(0, amb.ring().one())}, opts), CorrectnessError);
  CHECK_NOTHROW(closure(amb.space(), {amb.x(0, amb.ring().from_int(2))}, opts));
}

TEST_CASE("mixed commutators") {
  const Ambient z4(SystemLabel::parse("A2"), FiniteRing({4}));
  const Ideal two = principal_ideal(z4.ring(), 2);
  // AB = 0 here: both forms of the mixed commutator are trivial
  const auto m1 = mixed_commutator(z4, elementary_generators(z4, two), elementary_generators(z4, two));
  const auto m2 = mixed_commutator(z4, z_generators(z4, two, z4.ring().elements()), z_generators(z4, two, z4.ring().elements()));
  CHECK(m1.size() == 1);
  CHECK(m2.size() == 1);

  const Ambient z8(SystemLabel::parse("A2"), FiniteRing({8}));
  const Ideal a = principal_ideal(z8.ring(), 2);
  const Ideal b = principal_ideal(z8.ring(), 4);
  const auto ab = mixed_commutator(z8, elementary_generators(z8, a), elementary_generators(z8, b));
  const auto ba = mixed_commutator(z8, elementary_generators(z8, b), elementary_generators(z8, a));
  CHECK(ab.same_set(ba));
  CHECK(ab.size() == 1);  // AB = (8) = 0
  // [E(2), E(2)] fills the level-4 kernel: 256 elements, bounded below by
  // random commutators and above by the kernel order outside the library
  const auto aa = mixed_commutator(z8, elementary_generators(z8, a), elementary_generators(z8, a));
  CHECK(aa.size() == 256);
  // abelian: [X, X] trivial for a single root subgroup
  const auto u = root_generators(z8, {0}, unit_ideal(z8.ring()));
  CHECK(mixed_commutator(z8, u, u).size() == 1);
}

TEST_CASE("relative subgroup from sampled c values is seed independent") {
  const Ambient amb(SystemLabel::parse("A2"), FiniteRing({8}));
  const Ideal four = principal_ideal(amb.ring(), 4);
  const auto full = relative_elementary(amb, four);
  const auto& r = amb.ring();
  const auto s1 = relative_elementary_sampled(amb, four, {r.from_int(1), r.from_int(6)});
  const auto s2 = relative_elementary_sampled(amb, four, {r.from_int(3)});
  const auto s3 = relative_elementary_sampled(amb, four, {r.zero()});
  CHECK(s1.sorted_elements() == full.sorted_elements());
  CHECK(s2.sorted_elements() == full.sorted_elements());
  CHECK(s3.sorted_elements() == full.sorted_elements());
  CHECK(s1.generator_fingerprint() != s2.generator_fingerprint());
}

TEST_CASE("cache round trip") {
  const Ambient amb(SystemLabel::parse("C2"), FiniteRing({9}));
  const auto e = elementary_subgroup(amb, principal_ideal(amb.ring(), 3));
  const auto dir = std::filesystem::temp_directory_path() / "chevcomm-test-cache";
  std::filesystem::create_directories(dir);
  const auto p1 = (dir / "a.cache").string(), p2 = (dir / "b.cache").string();
  save_cache(e, amb.describe(), p1);
  const CacheContents c = load_cache(p1);
  CHECK(c.header.ambient == amb.describe());
  CHECK(c.header.count == e.size());
  CHECK(c.header.complete);
  CHECK(c.header.fingerprint == e.generator_fingerprint());
  CHECK(c.elements == e.sorted_elements());
  write_cache(c, p2);
  CHECK(slurp(p1) == slurp(p2));
  {
    std::ofstream bad(p2, std::ios::binary);
    bad << "not a cache\n";
  }
  CHECK_THROWS(load_cache(p2));
  std::filesystem::remove_all(dir);
}
