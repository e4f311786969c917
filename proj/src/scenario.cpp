#include "chevcomm/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef CHEVCOMM_DATA_DIR
#define CHEVCOMM_DATA_DIR "data"
#endif

namespace chevcomm {

namespace {

std::vector<std::vector<int>> parse_generators(const YAML::Node& node, const char* key) {
  std::vector<std::vector<int>> out;
  if (!node) return out;
  if (!node.IsSequence()) throw std::invalid_argument(std::string("ideal '") + key + "' must be a list of generators");
  for (const auto& g : node) {
    if (g.IsScalar()) {
      out.push_back({g.as<int>()});
    } else {
      out.push_back(g.as<std::vector<int>>());
    }
  }
  return out;
}

Ideal make_ideal(const FiniteRing& ring, const std::vector<std::vector<int>>& gens, const std::string& which) {
  std::vector<RingElem> elems;
  for (const auto& g : gens) {
    if (g.size() != ring.components()) {
      throw std::invalid_argument("generator of ideal " + which + " has " + std::to_string(g.size()) +
                                  " residues, the ring has " + std::to_string(ring.components()) + " components");
    }
    elems.push_back(ring.from_residues(g));
  }
  return ideal_from_generators(ring, elems);
}

}  // namespace

Ideal Scenario::a(const FiniteRing& ring) const { return make_ideal(ring, ideal_a, "A"); }
Ideal Scenario::b(const FiniteRing& ring) const { return make_ideal(ring, ideal_b, "B"); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "identities", "sandwich",  "generation",     "long_root_generation", "commutator_equality", "centrality",
      "bilinearity", "length_transfer", "balancing", "levi", "stability"};
  return names;
}

std::string default_bank_path() { return std::string(CHEVCOMM_DATA_DIR) + "/identities.yaml"; }

Scenario parse_scenario(const std::string& yaml_text) {
  const YAML::Node n = YAML::Load(yaml_text);
  Scenario s;
  if (!n["name"] || !n["system"] || !n["ring"]) throw std::invalid_argument("scenario needs name, system and ring");
  s.name = n["name"].as<std::string>();
  s.description = n["description"] ? n["description"].as<std::string>() : "";
  s.system = SystemLabel::parse(n["system"].as<std::string>());
  s.moduli = n["ring"].IsScalar() ? std::vector<int>{n["ring"].as<int>()} : n["ring"].as<std::vector<int>>();
  s.ideal_a = parse_generators(n["A"], "A");
  s.ideal_b = parse_generators(n["B"], "B");
  if (n["seed"]) s.seed = n["seed"].as<std::uint64_t>();
  if (n["budget"]) s.budget = n["budget"].as<std::size_t>();
  if (n["parallel"]) s.parallel = n["parallel"].as<bool>();
  if (n["optional"]) s.optional = n["optional"].as<bool>();
  if (n["long_root"]) s.long_root = n["long_root"].as<std::string>();
  if (n["stability_roots"]) s.stability_roots = n["stability_roots"].as<std::vector<std::string>>();
  if (n["identity_bank"]) s.bank_path = n["identity_bank"].as<std::string>();
  if (const YAML::Node m = n["samples"]) {
    auto get = [&m](const char* key, std::size_t& field) {
      if (m[key]) field = m[key].as<std::size_t>();
    };
    get("conjugators", s.samples.conjugators);
    get("word_length", s.samples.word_length);
    get("ring_assignments", s.samples.ring_assignments);
    get("commutators", s.samples.commutators);
    get("levi", s.samples.levi);
    get("c_values", s.samples.c_values);
  }
  if (n["suites"]) {
    s.suites = n["suites"].as<std::vector<std::string>>();
    const auto& known = suite_names();
    for (const auto& name : s.suites) {
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw std::invalid_argument("scenario " + s.name + ": unknown suite '" + name + "'");
      }
    }
  } else {
    s.suites = suite_names();
  }
  if (s.stability_roots.size() != 0 && s.stability_roots.size() != 2) {
    throw std::invalid_argument("scenario " + s.name + ": stability_roots needs exactly two roots");
  }
  // Validate ring and ideals eagerly so that errors point at the file.
  const FiniteRing ring = s.ring();
  (void)s.a(ring);
  (void)s.b(ring);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read scenario " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (const YAML::Exception& ex) {
    throw std::invalid_argument(path + ": " + ex.what());
  }
}

}  // namespace chevcomm
