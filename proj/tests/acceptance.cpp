// Acceptance gate: one line per criterion, exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "chevcomm/constants.hpp"
#include "chevcomm/identity_bank.hpp"
#include "chevcomm/scenario.hpp"
#include "chevcomm/suites.hpp"
#include "chevcomm/symbolic.hpp"
#include "chevcomm/word.hpp"

using namespace chevcomm;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<bool(std::ostringstream&)> run;
};

std::string scenario_path(const std::string& name) {
  return std::string(CHEVCOMM_DATA_DIR) + "/scenarios/" + name + ".yaml";
}

bool run_suites(Workbench& wb, const std::vector<std::string>& suites, std::ostringstream& log) {
  bool ok = true;
  for (const auto& name : suites) {
    const SuiteReport r = wb.run_suite(name);
    const bool good = r.status == SuiteStatus::Pass && r.checks_total > 0;
    if (!good) {
      log << ' ' << wb.scenario().name << '/' << name << '=' << to_string(r.status);
      if (!r.reason.empty()) log << " (" << r.reason << ')';
      for (const auto& w : r.witnesses) log << " [" << w.check << "]";
    }
    ok = ok && good;
  }
  return ok;
}

bool suites_pass(const std::string& scenario, const std::vector<std::string>& suites, std::ostringstream& log) {
  Workbench wb(load_scenario(scenario_path(scenario)));
  return run_suites(wb, suites, log);
}

bool criterion1(std::ostringstream& log) {
  bool ok = true;
  for (const auto& c : check_pinned_relations()) {
    if (!c.ok) log << ' ' << c.relation.system << " [" << c.relation.alpha << ',' << c.relation.beta << "] gave " << c.extracted;
    ok = ok && c.ok;
  }
  log << ' ' << pinned_relations().size() << " relations";
  return ok;
}

bool criterion2(std::ostringstream& log) {
  std::size_t pairs = 0;
  bool ok = true;
  const MultiPoly a = MultiPoly::variable("a");
  const MultiPoly b = MultiPoly::variable("b");
  for (const char* name : {"A2", "C2", "G2"}) {
    const ChevRep rep(SystemLabel::parse(name));
    const RootSystem& sys = rep.system();
    for (std::size_t r = 0; r < sys.size(); ++r) {
      const bool additive = verify_identity(rep, x_word(r, a) * x_word(r, b), x_word(r, a + b)).equal;
      if (!additive) log << ' ' << name << " additivity at " << sys.root(r).str();
      ok = ok && additive;
      for (std::size_t s = 0; s < sys.size(); ++s) {
        if (sys.root(s) == sys.negate(sys.root(r))) continue;
        ++pairs;
        Word rhs;
        if (!sys.proportional(sys.root(r), sys.root(s))) rhs = chevalley_expand(rep, r, s, a, b);
        const bool eq = verify_identity(rep, commutator(x_word(r, a), x_word(s, b)), rhs).equal;
        if (!eq) log << ' ' << name << " pair " << sys.root(r).str() << ", " << sys.root(s).str();
        ok = ok && eq;
      }
    }
  }
  log << ' ' << pairs << " ordered pairs";
  return ok && pairs >= 90;
}

bool criterion3(std::ostringstream& log) {
  const auto results = verify_bank(load_bank(default_bank_path()));
  std::size_t holds = 0, controls = 0;
  bool ok = true;
  for (const auto& r : results) {
    if (r.expect_pass) {
      holds += r.check.equal ? 1 : 0;
    } else {
      const bool witnessed = !r.check.equal && !r.check.witness.str().empty();
      controls += witnessed ? 1 : 0;
      ok = ok && witnessed;
    }
    if (!r.ok()) log << ' ' << r.name;
    ok = ok && r.ok();
  }
  log << ' ' << holds << " identities hold, " << controls << " known-false forms refuted with witnesses";
  return ok && controls > 0;
}

bool criterion4(std::ostringstream& log) {
  bool ok = true;
  for (const char* s : {"sl3_z4_a2_b2", "sl3_z8_a2_b2", "sp4_z27_a3_b3", "sp4_z9_a3_b3"}) {
    ok = suites_pass(s, {"sandwich"}, log) && ok;
  }
  return ok;
}

bool criterion5(std::ostringstream& log) {
  bool ok = true;
  for (const auto& [name, bound] : {std::pair{"sl3_z8_a2_b2", 256}, std::pair{"sp4_z27_a3_b3", 59049}}) {
    Workbench wb(load_scenario(scenario_path(name)));
    ok = run_suites(wb, {"generation", "long_root_generation", "commutator_equality"}, log) && ok;
    const std::size_t n = wb.relative_ab().size();
    log << ' ' << name << " |E(R,AB)| = " << n;
    ok = ok && n > 1 && n <= static_cast<std::size_t>(bound);
  }
  return ok;
}

bool criterion6(std::ostringstream& log) {
  bool ok = true;
  for (const char* s : {"sl3_z8_a2_b2", "sp4_z27_a3_b3"}) {
    if (load_scenario(scenario_path(s)).samples.conjugators < 200) {
      log << ' ' << s << " samples fewer than 200 conjugators";
      ok = false;
    }
    ok = suites_pass(s, {"centrality", "bilinearity"}, log) && ok;
  }
  return ok;
}

bool criterion7(std::ostringstream& log) {
  bool ok = suites_pass("sp4_z27_a3_b3", {"length_transfer", "balancing"}, log);
  ok = suites_pass("sl3_z8_a2_b2", {"length_transfer"}, log) && ok;
  ok = suites_pass("g2_z9_a3_b3", {"bilinearity", "length_transfer", "balancing"}, log) && ok;
  std::size_t replayed = 0;
  for (const auto& e : load_bank(default_bank_path())) {
    if (e.system != "G2" || !e.expect_pass) continue;
    if (!verify_entry(e).check.equal) {
      log << ' ' << e.name << " symbolic";
      ok = false;
    }
    const RingCheck rc = verify_entry_over_ring(e, FiniteRing({9}), 100, 7 + replayed);
    if (rc.failures) log << ' ' << e.name << " over Z/9: " << rc.witness;
    ok = ok && rc.failures == 0;
    ++replayed;
  }
  log << ' ' << replayed << " G2 bank entries replayed over Z/9";
  return ok && replayed > 0;
}

bool criterion8(std::ostringstream& log) { return suites_pass("sl4_z4_a2_b2", {"stability"}, log); }

bool criterion9(std::ostringstream& log) {
  const Ambient amb(SystemLabel::parse("A2"), FiniteRing({4}));
  const std::size_t order = closure(amb.space(), absolute_generators(amb)).size();
  log << " |SL(3,Z/4)| = " << order;
  bool ok = order == 43008;

  const Ambient amb8(SystemLabel::parse("A2"), FiniteRing({8}));
  const Ideal i4 = principal_ideal(amb8.ring(), 4);
  const auto s1 = relative_elementary_sampled(amb8, i4, {amb8.ring().from_int(1), amb8.ring().from_int(6)});
  const auto s2 = relative_elementary_sampled(amb8, i4, {amb8.ring().from_int(3), amb8.ring().from_int(5)});
  const bool deterministic = s1.sorted_elements() == s2.sorted_elements();
  log << ", two c samples give " << s1.size() << " and " << s2.size() << " elements";
  ok = ok && deterministic;

  const auto dir = std::filesystem::temp_directory_path() / "chevcomm-acceptance";
  std::filesystem::create_directories(dir);
  const auto p1 = (dir / "first.cache").string();
  const auto p2 = (dir / "second.cache").string();
  save_cache(s1, amb8.describe(), p1);
  const CacheContents loaded = load_cache(p1);
  const auto read = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  write_cache(loaded, p2);
  const bool round_trip = read(p1) == read(p2) && loaded.elements == s1.sorted_elements() &&
                          loaded.header.count == s1.size() && loaded.header.complete;
  log << ", cache round trip " << (round_trip ? "byte-identical" : "differs");
  std::filesystem::remove_all(dir);
  return ok && round_trip;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "structure constants", 10, criterion1},
      {2, "commutator formula and additivity", 60, criterion2},
      {3, "identity bank", 60, criterion3},
      {4, "sandwich inclusions", 300, criterion4},
      {5, "generation and commutator equalities", 900, criterion5},
      {6, "centrality and bilinearity", 600, criterion6},
      {7, "length transfer and balancing", 600, criterion7},
      {8, "stability", 600, criterion8},
      {9, "engine oracles", 300, criterion9},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << " error: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    if (!in_time) log << " exceeded the time limit";
    const bool pass = ok && in_time;
    all = all && pass;
    std::printf("criterion %d %-38s %s  %.2f s (limit %.0f s):%s\n", c.id, c.title.c_str(), pass ? "PASS" : "FAIL", secs,
                c.limit_seconds, log.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
