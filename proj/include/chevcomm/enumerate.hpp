#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevcomm/ring_matrix.hpp"
#include "chevcomm/rings.hpp"

namespace chevcomm {

/// A check that must never fail; raised on disagreement between
/// constructions that are required to agree, or on a kernel escape.
class CorrectnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a certified answer is requested from a partial enumeration.
class IncompleteSubgroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 24;

/// Insertion-ordered set of fixed-width byte strings: one arena plus an
/// open-addressing index. The arena order doubles as the BFS queue.
class ElementSet {
 public:
  explicit ElementSet(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }
  const std::uint8_t* at(std::size_t i) const { return arena_.data() + i * width_; }
  Mat get(std::size_t i) const { return Mat(at(i), at(i) + width_); }
  bool contains(const std::uint8_t* key) const;
  /// Returns true when the key was not present.
  bool insert(const std::uint8_t* key);
  /// All encodings in increasing lexicographic order.
  std::vector<Mat> sorted() const;

 private:
  std::uint64_t hash(const std::uint8_t* key) const;
  void grow();

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> arena_;
  std::vector<std::uint32_t> slots_;  // element index + 1, 0 = empty
};

struct ClosureOptions {
  std::size_t budget = kDefaultBudget;
  bool parallel = true;
  /// Elements are checked to reduce to the identity modulo this ideal while
  /// they are generated; an escape raises CorrectnessError.
  std::optional<Ideal> level;
  /// Products computed per batch before the serial insert step.
  std::size_t batch = 4096;
};

struct ClosureStats {
  std::size_t products = 0;
  std::size_t generators_offered = 0;
  std::size_t generators_kept = 0;
};

/// Finite subgroup grown by breadth-first left multiplication with its
/// generators and their inverses. Generators may be added at any time; one
/// already in the subgroup is dropped.
class EnumeratedSubgroup {
 public:
  EnumeratedSubgroup(const MatrixSpace& space, ClosureOptions options = {});

  const MatrixSpace& space() const { return space_; }
  const std::vector<GroupElem>& generators() const { return gens_; }
  std::size_t size() const { return elements_.size(); }
  bool complete() const { return complete_; }
  const ClosureStats& stats() const { return stats_; }
  const ElementSet& elements() const { return elements_; }
  const ClosureOptions& options() const { return options_; }

  /// Adds g (and extends to the new fixed point) when g is not a member.
  /// Returns true when the subgroup grew. No-op once the budget is exhausted.
  bool add_generator(const GroupElem& g);
  /// Adds every element of gens in order.
  void add_generators(const std::vector<GroupElem>& gens);
  /// Smallest supergroup normalized by every element of conjugators.
  void normalize(const std::vector<GroupElem>& conjugators);

  /// Exact membership; throws IncompleteSubgroupError when !complete().
  bool member(const Mat& m) const;
  bool member(const GroupElem& g) const { return member(g.mat); }
  /// Membership without the completeness guard (for progress checks).
  bool contains_raw(const Mat& m) const { return elements_.contains(m.data()); }

  /// Every element of this subgroup lies in other (both complete).
  bool subset_of(const EnumeratedSubgroup& other) const;
  bool same_set(const EnumeratedSubgroup& other) const;

  std::vector<Mat> sorted_elements() const { return elements_.sorted(); }
  /// FNV-1a digest of the sorted generator encodings.
  std::string generator_fingerprint() const;

 private:
  void run();
  void check_level(const std::uint8_t* m) const;

  MatrixSpace space_;
  ClosureOptions options_;
  ElementSet elements_;
  std::vector<GroupElem> gens_;
  std::vector<std::size_t> watermark_;
  bool complete_ = true;
  ClosureStats stats_;
};

EnumeratedSubgroup closure(const MatrixSpace& space, const std::vector<GroupElem>& gens, ClosureOptions options = {});

/// Serial reference closure kept for testing: plain BFS over std::set.
std::set<Mat> reference_closure(const MatrixSpace& space, const std::vector<GroupElem>& gens,
                                std::size_t budget = kDefaultBudget);

/// x y^-1 in N. Throws IncompleteSubgroupError for a partial N.
bool congruent(const MatrixSpace& space, const GroupElem& x, const GroupElem& y, const EnumeratedSubgroup& n);

/// Entry-wise reduction of g modulo the level is the identity.
bool congruence_kernel_member(const MatrixSpace& space, const GroupElem& g, const Ideal& level);

struct CacheHeader {
  std::string ambient;
  std::string fingerprint;
  bool complete = false;
  std::size_t count = 0;
  std::size_t width = 0;
};

/// Text header followed by the sorted encodings.
void save_cache(const EnumeratedSubgroup& s, const std::string& ambient, const std::string& path);
struct CacheContents {
  CacheHeader header;
  std::vector<Mat> elements;
};
CacheContents load_cache(const std::string& path);
/// Writes contents in the save_cache format; load_cache then write_cache
/// reproduces the file byte for byte.
void write_cache(const CacheContents& contents, const std::string& path);

}  // namespace chevcomm
