#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chevcomm/enumerate.hpp"
#include "chevcomm/identity_bank.hpp"
#include "chevcomm/report.hpp"
#include "chevcomm/ring_matrix.hpp"
#include "chevcomm/scenario.hpp"
#include "chevcomm/subgroups.hpp"

namespace chevcomm {

/// Random product of absolute root elements, kept as tokens for witnesses.
struct TrackedWord {
  std::vector<std::pair<std::size_t, RingElem>> tokens;
  GroupElem value;
};

/// Runs the suites of one scenario. Enumerated subgroups are built on first
/// use and shared by every suite.
class Workbench {
 public:
  explicit Workbench(Scenario scenario);

  const Scenario& scenario() const { return scenario_; }
  const Ambient& ambient() const { return amb_; }
  const Ideal& a() const { return a_; }
  const Ideal& b() const { return b_; }
  const Ideal& ab() const { return ab_; }
  const ConditionStar& condition_star() const { return star_; }

  /// E(Phi, R, AB), built by both constructions.
  const EnumeratedSubgroup& relative_ab();
  /// E(Phi, AB).
  const EnumeratedSubgroup& elementary_ab();
  /// [E(Phi, A), E(Phi, B)].
  const EnumeratedSubgroup& mixed_elementary();
  /// [E(Phi, R, A), E(Phi, R, B)], from the z-generators of both factors.
  const EnumeratedSubgroup& mixed_relative();

  SuiteReport run_suite(const std::string& name);
  Report run();

  /// Replayable text for x_root(t) tokens and for y_root(a, b).
  std::string render(const TrackedWord& w) const;
  std::string render_y(std::size_t root, const RingElem& a, const RingElem& b) const;
  TrackedWord random_absolute_word(std::mt19937_64& rng) const;

 private:
  ClosureOptions closure_options() const;
  MixedOptions mixed_options(std::uint64_t salt) const;
  std::vector<RingElem> c_values() const;
  bool require_star(SuiteReport& rep) const;
  bool require_complete(SuiteReport& rep, const EnumeratedSubgroup& s, const std::string& what) const;

  SuiteReport identities();
  SuiteReport sandwich();
  SuiteReport generation();
  SuiteReport long_root_generation();
  SuiteReport commutator_equality();
  SuiteReport centrality();
  SuiteReport bilinearity();
  SuiteReport length_transfer();
  SuiteReport balancing();
  SuiteReport levi();
  SuiteReport stability();

  Scenario scenario_;
  Ambient amb_;
  Ideal a_;
  Ideal b_;
  Ideal ab_;
  ConditionStar star_;
  std::vector<BankEntry> bank_;
  std::unique_ptr<EnumeratedSubgroup> relative_ab_;
  std::unique_ptr<EnumeratedSubgroup> elementary_ab_;
  std::unique_ptr<EnumeratedSubgroup> mixed_elementary_;
  std::unique_ptr<EnumeratedSubgroup> mixed_relative_;
};

}  // namespace chevcomm
