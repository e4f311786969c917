#include "chevcomm/identity_bank.hpp"

#include <yaml-cpp/yaml.h>

#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chevcomm/ring_matrix.hpp"

namespace chevcomm {

namespace {

std::string required(const YAML::Node& node, const char* key, const std::string& where) {
  if (!node[key]) throw std::invalid_argument(where + ": missing field '" + key + "'");
  return node[key].as<std::string>();
}

std::pair<std::string, std::string> split_binding(const std::string& text, const std::string& where) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument(where + ": root binding '" + text + "' has no '='");
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

}  // namespace

std::vector<BankEntry> parse_bank(const std::string& yaml_text) {
  const YAML::Node root = YAML::Load(yaml_text);
  const YAML::Node list = root["identities"] ? root["identities"] : root;
  if (!list.IsSequence()) throw std::invalid_argument("identity bank must be a list of entries");
  std::vector<BankEntry> out;
  std::set<std::string> seen;
  for (const auto& node : list) {
    BankEntry e;
    e.name = required(node, "name", "identity bank entry");
    const std::string where = "identity '" + e.name + "'";
    if (!seen.insert(e.name).second) throw std::invalid_argument(where + " is defined twice");
    e.system = required(node, "system", where);
    e.lhs = required(node, "lhs", where);
    e.rhs = required(node, "rhs", where);
    e.anchor = node["anchor"] ? node["anchor"].as<std::string>() : "";
    if (node["roots"]) {
      for (const auto& b : node["roots"]) e.roots.push_back(split_binding(b.as<std::string>(), where));
    }
    const std::string expect = node["expect"] ? node["expect"].as<std::string>() : "pass";
    if (expect != "pass" && expect != "fail") throw std::invalid_argument(where + ": expect must be pass or fail");
    e.expect_pass = expect == "pass";
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<BankEntry> load_bank(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read identity bank " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bank(ss.str());
}

CompiledEntry compile_entry(const BankEntry& entry) {
  CompiledEntry c{ChevRep(SystemLabel::parse(entry.system)), {}, {}, {}, {}};
  const RootSystem& sys = c.rep.system();
  c.names = default_root_names(sys);
  for (const auto& [name, expr] : entry.roots) c.names[name] = parse_root(expr, sys, c.names).coords;
  c.lhs = parse_word(entry.lhs, sys, c.names);
  c.rhs = parse_word(entry.rhs, sys, c.names);
  std::set<std::string> vars;
  for (const Word* w : {&c.lhs, &c.rhs}) {
    for (const auto& t : w->tokens) vars.insert(t.coef.variables().begin(), t.coef.variables().end());
  }
  c.variables.assign(vars.begin(), vars.end());
  return c;
}

BankResult verify_entry(const BankEntry& entry) {
  const auto start = std::chrono::steady_clock::now();
  const CompiledEntry c = compile_entry(entry);
  BankResult r;
  r.name = entry.name;
  r.system = entry.system;
  r.anchor = entry.anchor;
  r.expect_pass = entry.expect_pass;
  r.check = verify_identity(c.rep, c.lhs, c.rhs);
  r.lhs_word = render_word(c.lhs, c.rep.system());
  r.rhs_word = render_word(c.rhs, c.rep.system());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<BankResult> verify_bank(const std::vector<BankEntry>& entries, bool parallel) {
  std::vector<BankResult> out(entries.size());
  std::vector<std::string> errors(entries.size());
  const long long n = static_cast<long long>(entries.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      out[i] = verify_entry(entries[i]);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) throw std::invalid_argument("identity '" + entries[i].name + "': " + errors[i]);
  }
  return out;
}

RingCheck verify_entry_over_ring(const BankEntry& entry, const FiniteRing& ring, std::size_t samples,
                                 std::uint64_t seed) {
  const CompiledEntry c = compile_entry(entry);
  const Ambient amb(c.rep.system().label(), ring);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ring.size() - 1);
  RingCheck out;
  for (std::size_t k = 0; k < samples; ++k) {
    Assignment asg;
    for (const auto& v : c.variables) asg[v] = ring.element(pick(rng));
    ++out.assignments;
    const GroupElem l = amb.eval(c.lhs, asg);
    const GroupElem r = amb.eval(c.rhs, asg);
    if (l.mat == r.mat) continue;
    if (out.failures++ == 0) {
      std::ostringstream os;
      for (const auto& [v, x] : asg) os << v << '=' << ring.format(x) << ' ';
      os << "lhs " << amb.space().format(l.mat) << " rhs " << amb.space().format(r.mat);
      out.witness = os.str();
    }
  }
  return out;
}

}  // namespace chevcomm
