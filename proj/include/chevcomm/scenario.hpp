#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chevcomm/enumerate.hpp"
#include "chevcomm/rings.hpp"
#include "chevcomm/system_label.hpp"

namespace chevcomm {

struct SampleCounts {
  /// Random elements x of E(Phi, R) conjugating the symbols.
  std::size_t conjugators = 200;
  /// Upper bound on the length of each random word.
  std::size_t word_length = 12;
  /// Random assignments when replaying the identity bank over the ring.
  std::size_t ring_assignments = 100;
  /// Random commutators checked against mixed commutator subgroups.
  std::size_t commutators = 64;
  /// Random Levi elements per fundamental root.
  std::size_t levi = 64;
  /// Values of the free parameter c; 0 means every ring element.
  std::size_t c_values = 0;
};

/// A system, a ring, two ideals and the checks to run on them.
struct Scenario {
  std::string name;
  std::string description;
  SystemLabel system;
  std::vector<int> moduli;
  std::vector<std::vector<int>> ideal_a;  ///< generator tuples
  std::vector<std::vector<int>> ideal_b;
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultBudget;
  bool parallel = true;
  SampleCounts samples;
  /// Root expression for the distinguished long root; empty picks the first
  /// long fundamental root.
  std::string long_root;
  /// Two root expressions spanning the rank-two subsystem for the stability check.
  std::vector<std::string> stability_roots;
  /// Heavy scenarios that are only run on request.
  bool optional = false;
  /// Identity bank file; empty selects the installed default.
  std::string bank_path;

  FiniteRing ring() const { return FiniteRing(moduli); }
  Ideal a(const FiniteRing& ring) const;
  Ideal b(const FiniteRing& ring) const;
};

/// Suite names in execution order.
const std::vector<std::string>& suite_names();

Scenario parse_scenario(const std::string& yaml_text);
Scenario load_scenario(const std::string& path);

/// Default identity bank shipped with the sources.
std::string default_bank_path();

}  // namespace chevcomm
