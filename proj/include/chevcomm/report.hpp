#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace chevcomm {

enum class SuiteStatus { Pass, Fail, Skipped };

std::string to_string(SuiteStatus s);

/// A failed check, with words that replay it through the word parser.
struct Witness {
  std::string check;
  std::string words;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  SuiteStatus status = SuiteStatus::Pass;
  std::string reason;  ///< why a suite was skipped
  std::size_t checks_total = 0;
  std::size_t checks_failed = 0;
  std::map<std::string, std::size_t> subgroup_orders;
  std::vector<Witness> witnesses;
  /// Findings that do not affect the status.
  std::vector<std::string> notes;
  double duration = 0;

  /// Records one check; failures beyond the first few keep only the count.
  void record(bool ok, const std::string& check, const std::string& words = {}, const std::string& detail = {});
  /// Fail when any check failed, otherwise pass (skipped stays skipped).
  void settle();
};

struct Report {
  std::string scenario;
  std::string system;
  std::string ring;
  std::string ideal_a;
  std::string ideal_b;
  std::string ideal_ab;
  bool condition_star = true;
  std::string condition_star_diagnostic;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::vector<SuiteReport> suites;

  bool any_failed() const;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& r);

}  // namespace chevcomm
