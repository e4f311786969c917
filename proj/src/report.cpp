#include "chevcomm/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace chevcomm {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

SuiteStatus status_from_string(const std::string& s) {
  if (s == "pass") return SuiteStatus::Pass;
  if (s == "fail") return SuiteStatus::Fail;
  if (s == "skipped") return SuiteStatus::Skipped;
  throw std::invalid_argument("unknown suite status '" + s + "'");
}

}  // namespace

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Skipped: return "skipped";
  }
  return "?";
}

void SuiteReport::record(bool ok, const std::string& check, const std::string& words, const std::string& detail) {
  ++checks_total;
  if (ok) return;
  ++checks_failed;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back({check, words, detail});
}

void SuiteReport::settle() {
  if (status == SuiteStatus::Skipped) return;
  status = checks_failed == 0 ? SuiteStatus::Pass : SuiteStatus::Fail;
}

bool Report::any_failed() const {
  for (const auto& s : suites) {
    if (s.status == SuiteStatus::Fail) return true;
  }
  return false;
}

nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json suites = json::array();
  for (const auto& s : r.suites) {
    json w = json::array();
    for (const auto& x : s.witnesses) w.push_back({{"check", x.check}, {"words", x.words}, {"detail", x.detail}});
    suites.push_back({{"scenario", r.scenario},
                      {"suite", s.suite},
                      {"status", to_string(s.status)},
                      {"reason", s.reason},
                      {"checks_total", s.checks_total},
                      {"checks_failed", s.checks_failed},
                      {"subgroup_orders", s.subgroup_orders},
                      {"witnesses", w},
                      {"notes", s.notes},
                      {"seed", r.seed},
                      {"duration", s.duration}});
  }
  return {{"scenario", r.scenario},
          {"system", r.system},
          {"ring", r.ring},
          {"ideals", {{"A", r.ideal_a}, {"B", r.ideal_b}, {"AB", r.ideal_ab}}},
          {"condition_star", {{"holds", r.condition_star}, {"diagnostic", r.condition_star_diagnostic}}},
          {"seed", r.seed},
          {"tool_version", r.tool_version},
          {"suites", suites}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.scenario = j.at("scenario").get<std::string>();
  r.system = j.at("system").get<std::string>();
  r.ring = j.at("ring").get<std::string>();
  r.ideal_a = j.at("ideals").at("A").get<std::string>();
  r.ideal_b = j.at("ideals").at("B").get<std::string>();
  r.ideal_ab = j.at("ideals").at("AB").get<std::string>();
  r.condition_star = j.at("condition_star").at("holds").get<bool>();
  r.condition_star_diagnostic = j.at("condition_star").at("diagnostic").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.tool_version = j.at("tool_version").get<std::string>();
  for (const auto& s : j.at("suites")) {
    SuiteReport x;
    x.suite = s.at("suite").get<std::string>();
    x.status = status_from_string(s.at("status").get<std::string>());
    x.reason = s.at("reason").get<std::string>();
    x.checks_total = s.at("checks_total").get<std::size_t>();
    x.checks_failed = s.at("checks_failed").get<std::size_t>();
    x.subgroup_orders = s.at("subgroup_orders").get<std::map<std::string, std::size_t>>();
    for (const auto& w : s.at("witnesses")) {
      x.witnesses.push_back({w.at("check").get<std::string>(), w.at("words").get<std::string>(),
                             w.at("detail").get<std::string>()});
    }
    x.notes = s.at("notes").get<std::vector<std::string>>();
    x.duration = s.at("duration").get<double>();
    r.suites.push_back(std::move(x));
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "scenario " << r.scenario << " (" << r.system << " over " << r.ring << ")\n"
     << "  A = " << r.ideal_a << ", B = " << r.ideal_b << ", AB = " << r.ideal_ab << '\n'
     << "  condition (*): " << (r.condition_star ? "holds" : "fails");
  if (!r.condition_star_diagnostic.empty()) os << " (" << r.condition_star_diagnostic << ')';
  os << "\n  seed " << r.seed << ", chevcomm " << r.tool_version << '\n';
  for (const auto& s : r.suites) {
    os << "  [" << std::left << std::setw(7) << to_string(s.status) << "] " << std::setw(22) << s.suite << ' '
       << s.checks_total - s.checks_failed << '/' << s.checks_total << " checks, " << std::fixed << std::setprecision(2)
       << s.duration << " s\n";
    os.unsetf(std::ios::fixed);
    if (!s.reason.empty()) os << "      " << s.reason << '\n';
    for (const auto& [name, order] : s.subgroup_orders) os << "      |" << name << "| = " << order << '\n';
    for (const auto& note : s.notes) os << "      note: " << note << '\n';
    for (const auto& w : s.witnesses) {
      os << "      witness: " << w.check << '\n';
      if (!w.words.empty()) os << "        " << w.words << '\n';
      if (!w.detail.empty()) os << "        " << w.detail << '\n';
    }
  }
  return os.str();
}

}  // namespace chevcomm
