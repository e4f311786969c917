// chevcomm command line: structure constants, identity bank, subgroup
// enumeration and scenario verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chevcomm/constants.hpp"
#include "chevcomm/identity_bank.hpp"
#include "chevcomm/report.hpp"
#include "chevcomm/scenario.hpp"
#include "chevcomm/subgroups.hpp"
#include "chevcomm/suites.hpp"

using namespace chevcomm;

namespace {

int cmd_constants(const std::vector<std::string>& systems) {
  bool ok = true;
  for (const auto& c : check_pinned_relations()) {
    std::cout << (c.ok ? "ok       " : "MISMATCH ") << c.relation.system << " [x_" << c.relation.alpha << "(a), x_"
              << c.relation.beta << "(b)] = " << c.extracted << '\n';
    if (!c.ok) {
      std::cout << "         expected " << c.expected << '\n';
      ok = false;
    }
  }
  for (const auto& s : systems) {
    const ChevRep rep(SystemLabel::parse(s));
    const RootSystem& sys = rep.system();
    const auto table = structure_constants(rep);
    std::cout << '\n' << sys.label().str() << " (" << rep.describe() << "), " << table.size() << " constants\n";
    for (const auto& c : table) {
      std::cout << "  N(" << sys.root(c.alpha).str() << ", " << sys.root(c.beta).str() << ", " << c.i << ", " << c.j
                << ") = " << c.value << '\n';
    }
  }
  return ok ? 0 : 1;
}

int cmd_identities(const std::string& bank_path, const std::vector<int>& ring, std::size_t samples,
                   std::uint64_t seed) {
  const auto entries = load_bank(bank_path);
  const auto results = verify_bank(entries);
  bool ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::cout << (r.ok() ? "ok   " : "FAIL ") << std::left << std::setw(40) << r.name << ' '
              << (r.check.equal ? "holds" : "does not hold") << (r.expect_pass ? "" : " (expected)") << "  "
              << std::fixed << std::setprecision(2) << r.seconds << " s\n";
    if (!r.check.equal) std::cout << "     " << r.check.witness.str() << '\n';
    ok = ok && r.ok();
    if (!ring.empty() && entries[i].expect_pass) {
      const RingCheck rc = verify_entry_over_ring(entries[i], FiniteRing(ring), samples, seed + i);
      std::cout << "     over " << FiniteRing(ring).describe() << ": " << rc.assignments - rc.failures << '/'
                << rc.assignments << " assignments agree\n";
      if (rc.failures) std::cout << "     " << rc.witness << '\n';
      ok = ok && rc.failures == 0;
    }
  }
  return ok ? 0 : 1;
}

int cmd_enumerate(const std::string& scenario_path, const std::string& which, const std::string& cache) {
  Workbench wb(load_scenario(scenario_path));
  const auto start = std::chrono::steady_clock::now();
  const EnumeratedSubgroup* s = nullptr;
  if (which == "relative_ab") s = &wb.relative_ab();
  else if (which == "elementary_ab") s = &wb.elementary_ab();
  else if (which == "mixed_elementary") s = &wb.mixed_elementary();
  else if (which == "mixed_relative") s = &wb.mixed_relative();
  else throw CLI::ValidationError("--subgroup", "unknown subgroup '" + which + "'");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << which << " in " << wb.ambient().describe() << ": " << s->size() << " elements"
            << (s->complete() ? "" : " (incomplete)") << ", " << s->generators().size() << " generators kept, "
            << std::fixed << std::setprecision(2) << secs << " s\n";
  if (!cache.empty()) {
    save_cache(*s, wb.ambient().describe(), cache);
    std::cout << "cache written to " << cache << '\n';
  }
  return s->complete() ? 0 : 1;
}

int cmd_verify(const std::vector<std::string>& paths, const std::vector<std::string>& suites, bool include_optional,
               const std::string& json_path, std::optional<std::uint64_t> seed) {
  nlohmann::json out = {{"reports", nlohmann::json::array()}};
  bool failed = false;
  for (const auto& path : paths) {
    Scenario sc = load_scenario(path);
    if (sc.optional && !include_optional) {
      std::cout << "scenario " << sc.name << " is optional; pass --include-optional to run it\n\n";
      continue;
    }
    if (!suites.empty()) sc.suites = suites;
    if (seed) sc.seed = *seed;
    Workbench wb(std::move(sc));
    const Report r = wb.run();
    std::cout << render_text(r) << '\n' << std::flush;
    failed = failed || r.any_failed();
    out["reports"].push_back(to_json(r));
  }
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw std::runtime_error("cannot write " + json_path);
    f << out.dump(2) << '\n';
  }
  return failed ? 1 : 0;
}

int cmd_report(const std::string& json_path) {
  std::ifstream in(json_path);
  if (!in) throw std::runtime_error("cannot read " + json_path);
  const nlohmann::json j = nlohmann::json::parse(in);
  bool failed = false;
  for (const auto& r : j.at("reports")) {
    const Report rep = report_from_json(r);
    std::cout << render_text(rep) << '\n';
    failed = failed || rep.any_failed();
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chevcomm: commutators of relative elementary subgroups in Chevalley groups"};
  app.set_version_flag("--version", std::string(CHEVCOMM_VERSION));
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "check the pinned structure constants and print full tables");
  std::vector<std::string> systems;
  constants->add_option("--system", systems, "also print every constant of these systems (A2, C2, G2, ...)");

  auto* identities = app.add_subcommand("identities", "verify the identity bank symbolically");
  std::string bank = default_bank_path();
  std::vector<int> ring;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  identities->add_option("--bank", bank, "identity bank file")->check(CLI::ExistingFile);
  identities->add_option("--ring", ring, "also replay each entry over this ring (list of moduli)");
  identities->add_option("--samples", samples, "random assignments per entry for --ring");
  identities->add_option("--seed", seed, "seed for --ring");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate one subgroup of a scenario and cache it");
  std::string scenario_path, which = "relative_ab", cache;
  enumerate->add_option("scenario", scenario_path, "scenario file")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--subgroup", which, "relative_ab | elementary_ab | mixed_elementary | mixed_relative");
  enumerate->add_option("--cache", cache, "write the sorted element list here");

  auto* verify = app.add_subcommand("verify", "run scenario suites");
  std::vector<std::string> paths, suites;
  std::string json_path;
  bool include_optional = false;
  std::optional<std::uint64_t> verify_seed;
  verify->add_option("scenarios", paths, "scenario files")->required()->check(CLI::ExistingFile);
  verify->add_option("--suite", suites, "run only these suites");
  verify->add_option("--json", json_path, "write the structured report here");
  verify->add_option("--seed", verify_seed, "override the scenario seed");
  verify->add_flag("--include-optional", include_optional, "also run scenarios marked optional");

  auto* report = app.add_subcommand("report", "render a saved structured report");
  std::string report_path;
  report->add_option("file", report_path, "report written by verify --json")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*constants) return cmd_constants(systems);
    if (*identities) return cmd_identities(bank, ring, samples, seed);
    if (*enumerate) return cmd_enumerate(scenario_path, which, cache);
    if (*verify) return cmd_verify(paths, suites, include_optional, json_path, verify_seed);
    if (*report) return cmd_report(report_path);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
