#pragma once

#include <string>
#include <vector>

#include "chevcomm/symbolic.hpp"

namespace chevcomm {

struct PinnedTerm {
  int i = 0;
  int j = 0;
  long long value = 0;
};

/// A commutator [x_alpha(a), x_beta(b)] whose expansion is fixed in advance;
/// alpha and beta are root expressions over the default names.
struct PinnedRelation {
  std::string system;
  std::string alpha;
  std::string beta;
  std::vector<PinnedTerm> terms;  ///< in root_string order
};

/// The C2 fundamental relation and the five G2 relations with alpha short,
/// beta long: the sign convention of ChevRep is tuned to reproduce these.
const std::vector<PinnedRelation>& pinned_relations();

struct PinnedCheck {
  PinnedRelation relation;
  bool ok = false;
  std::string expected;
  std::string extracted;
};

std::vector<PinnedCheck> check_pinned_relations();

/// "x[alpha+beta](ab) x[alpha+2beta](ab^2)" style rendering of an expansion.
std::string render_expansion(const ChevRep& rep, const std::vector<StructureConstant>& constants);

}  // namespace chevcomm
