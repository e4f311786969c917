#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chevcomm/rings.hpp"
#include "chevcomm/symbolic.hpp"
#include "chevcomm/word.hpp"

namespace chevcomm {

/// One identity between two words, stored as text so that entries can be
/// added without touching code.
struct BankEntry {
  std::string name;
  std::string system;
  /// Ordered (name, expression) root bindings; later ones may use earlier ones.
  std::vector<std::pair<std::string, std::string>> roots;
  std::string lhs;
  std::string rhs;
  /// false for entries kept on purpose as known-false forms or controls.
  bool expect_pass = true;
  std::string anchor;
};

std::vector<BankEntry> parse_bank(const std::string& yaml_text);
std::vector<BankEntry> load_bank(const std::string& path);

struct CompiledEntry {
  ChevRep rep;
  RootNames names;
  Word lhs;
  Word rhs;
  std::vector<std::string> variables;
};

CompiledEntry compile_entry(const BankEntry& entry);

struct BankResult {
  std::string name;
  std::string system;
  std::string anchor;
  bool expect_pass = true;
  IdentityCheck check;
  std::string lhs_word;
  std::string rhs_word;
  double seconds = 0;

  /// The outcome matches the entry's expectation.
  bool ok() const { return check.equal == expect_pass; }
};

BankResult verify_entry(const BankEntry& entry);
/// Entries are independent and verified concurrently; results keep input order.
std::vector<BankResult> verify_bank(const std::vector<BankEntry>& entries, bool parallel = true);

struct RingCheck {
  std::size_t assignments = 0;
  std::size_t failures = 0;
  std::string witness;
};

/// Evaluates both sides over the ring on random assignments of the entry's
/// variables and compares the matrices.
RingCheck verify_entry_over_ring(const BankEntry& entry, const FiniteRing& ring, std::size_t samples,
                                 std::uint64_t seed);

}  // namespace chevcomm
