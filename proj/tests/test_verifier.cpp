#include <doctest.h>

#include "chevcomm/identity_bank.hpp"
#include "chevcomm/report.hpp"
#include "chevcomm/scenario.hpp"
#include "chevcomm/suites.hpp"

using namespace chevcomm;

namespace {

nlohmann::json without_durations(nlohmann::json j) {
  for (auto& s : j["suites"]) s.erase("duration");
  return j;
}

const SuiteReport& find(const Report& r, const std::string& name) {
  for (const auto& s : r.suites) {
    if (s.suite == name) return s;
  }
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("scenario parsing") {
  const Scenario s = parse_scenario(R"(
name: demo
system: C2
ring: [6, 4]
A: [[3, 2]]
B: [[0, 2], [3, 0]]
suites: [sandwich, centrality]
samples:
  conjugators: 5
)");
  CHECK(s.name == "demo");
  CHECK(s.system == SystemLabel::parse("C2"));
  CHECK(s.moduli == std::vector<int>{6, 4});
  CHECK(s.a(s.ring()).size() == 4);
  CHECK(s.b(s.ring()).size() == 4);
  CHECK(s.suites == std::vector<std::string>{"sandwich", "centrality"});
  CHECK(s.samples.conjugators == 5);
  CHECK(s.samples.word_length == 12);

  CHECK_THROWS(parse_scenario("name: x\nsystem: A2\nring: [4]\nsuites: [nonsense]\n"));
  CHECK_THROWS(parse_scenario("name: x\nsystem: B2\nring: [4]\n"));
  CHECK_THROWS(parse_scenario("system: A2\nring: [4]\n"));
  CHECK_THROWS(parse_scenario("name: x\nsystem: A2\nring: [4]\nA: [[1, 1]]\n").a(FiniteRing({4})));
  CHECK(suite_names().size() == 11);
}

TEST_CASE("shipped scenarios load") {
  for (const char* name : {"sl3_z4_a2_b2", "sl3_z8_a2_b2", "sl3_z8_a2_b4", "sl4_z4_a2_b2", "sp4_z9_a3_b3",
                           "sp4_z27_a3_b3", "g2_z9_a3_b3", "g2_z27_a3_b3"}) {
    CAPTURE(name);
    const Scenario s = load_scenario(std::string(CHEVCOMM_DATA_DIR) + "/scenarios/" + name + ".yaml");
    CHECK(s.name == name);
    CHECK(s.samples.conjugators >= 200);
  }
}

TEST_CASE("identity bank") {
  const auto entries = load_bank(default_bank_path());
  CHECK(entries.size() >= 10);
  std::size_t controls = 0;
  for (const auto& r : verify_bank(entries)) {
    CAPTURE(r.name);
    CHECK(r.ok());
    if (!r.expect_pass) {
      ++controls;
      CHECK_FALSE(r.check.witness.str().empty());
    }
  }
  CHECK(controls >= 1);
  const auto broken = parse_bank("identities:\n  - name: x\n    system: A2\n    lhs: x[a1](a\n    rhs: e\n");
  REQUIRE(broken.size() == 1);
  CHECK_THROWS(compile_entry(broken[0]));
  CHECK_THROWS(parse_bank("entries: []\n"));
}

TEST_CASE("identity bank specialised to Z/8") {
  std::uint64_t seed = 40;
  for (const auto& e : load_bank(default_bank_path())) {
    if (!e.expect_pass) continue;
    CAPTURE(e.name);
    const RingCheck rc = verify_entry_over_ring(e, FiniteRing({8}), 100, ++seed);
    CHECK(rc.assignments == 100);
    CHECK(rc.failures == 0);
  }
}

TEST_CASE("a false identity is caught over the ring too") {
  BankEntry e;
  e.name = "wrong-sign";
  e.system = "A2";
  e.lhs = "[x[a1](a), x[a2](b)]";
  e.rhs = "x[a1+a2](-a*b)";
  e.expect_pass = false;
  const BankResult r = verify_entry(e);
  CHECK_FALSE(r.check.equal);
  CHECK(r.ok());
  const RingCheck rc = verify_entry_over_ring(e, FiniteRing({8}), 50, 1);
  CHECK(rc.failures > 0);
  CHECK_FALSE(rc.witness.empty());
}

TEST_CASE("condition (*) failure skips the conditional suites with a diagnostic") {
  Scenario s = parse_scenario("name: c2z4\nsystem: C2\nring: [4]\nA: [2]\nB: [2]\nsuites: [sandwich, centrality, balancing]\n");
  Workbench wb(s);
  const Report r = wb.run();
  CHECK_FALSE(r.condition_star);
  // the sandwich inclusions need no hypothesis on the ring
  CHECK(find(r, "sandwich").status == SuiteStatus::Pass);
  for (const char* name : {"centrality", "balancing"}) {
    CHECK(find(r, name).status == SuiteStatus::Skipped);
    CHECK(find(r, name).reason.find("condition (*)") != std::string::npos);
  }
  CHECK_FALSE(r.any_failed());
}

TEST_CASE("zero ideal makes every subgroup trivial") {
  Scenario s = parse_scenario(
      "name: zero\nsystem: A2\nring: [4]\nA: [0]\nB: [2]\n"
      "suites: [sandwich, generation, commutator_equality, centrality]\n");
  s.samples.conjugators = 10;
  Workbench wb(s);
  const Report r = wb.run();
  CHECK_FALSE(r.any_failed());
  CHECK(wb.relative_ab().size() == 1);
  CHECK(wb.mixed_elementary().size() == 1);
  CHECK(wb.mixed_relative().size() == 1);
}

TEST_CASE("SL(3, Z/8) with A = B = (2)") {
  Workbench wb(load_scenario(std::string(CHEVCOMM_DATA_DIR) + "/scenarios/sl3_z8_a2_b2.yaml"));
  const Report r = wb.run();
  CHECK_FALSE(r.any_failed());
  CHECK(r.ideal_ab == "(4)");
  CHECK(wb.relative_ab().size() == 256);
  CHECK(wb.elementary_ab().size() == 64);
  CHECK(wb.mixed_elementary().same_set(wb.mixed_relative()));
  CHECK(find(r, "generation").status == SuiteStatus::Pass);
  CHECK(find(r, "stability").status == SuiteStatus::Skipped);
  for (const auto& s : r.suites) CHECK(s.status != SuiteStatus::Fail);
}

TEST_CASE("reports are deterministic and survive JSON") {
  const Scenario s = load_scenario(std::string(CHEVCOMM_DATA_DIR) + "/scenarios/sl3_z8_a2_b4.yaml");
  const Report r1 = Workbench(s).run();
  const Report r2 = Workbench(s).run();
  CHECK(without_durations(to_json(r1)) == without_durations(to_json(r2)));
  const Report back = report_from_json(to_json(r1));
  CHECK(to_json(back) == to_json(r1));
  CHECK(render_text(back) == render_text(r1));
  CHECK(to_json(r1)["suites"][0].contains("seed"));
}

TEST_CASE("suite reports keep only a few witnesses") {
  SuiteReport rep;
  for (int i = 0; i < 20; ++i) rep.record(i % 2 == 0, "check " + std::to_string(i));
  rep.settle();
  CHECK(rep.status == SuiteStatus::Fail);
  CHECK(rep.checks_total == 20);
  CHECK(rep.checks_failed == 10);
  CHECK(rep.witnesses.size() == 5);
  SuiteReport ok;
  ok.record(true, "fine");
  ok.settle();
  CHECK(ok.status == SuiteStatus::Pass);
}
