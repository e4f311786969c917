#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chevcomm/system_label.hpp"

namespace chevcomm {

enum class LengthClass { Long, Short };

struct Root {
  std::vector<int> coords;
  LengthClass length = LengthClass::Long;

  bool is_long() const { return length == LengthClass::Long; }
  /// "(1,-1,0) long"
  std::string str() const;

  friend bool operator==(const Root& x, const Root& y) { return x.coords == y.coords; }
  friend auto operator<=>(const Root& x, const Root& y) { return x.coords <=> y.coords; }
};

/// One member i*alpha + j*beta of a root string, with i, j >= 1.
struct StringTerm {
  int i = 0;
  int j = 0;
  Root root;
};

struct Rank2Embedding {
  /// "A1xA1", "A2", "C2" or "G2".
  std::string type;
  /// All roots of Phi lying in the plane of the two input roots.
  std::vector<Root> roots;
  /// Fundamental pair of the subsystem (positivity inherited from Phi).
  Root first;
  Root second;
  /// Coordinates of the two input roots in the basis (first, second).
  std::pair<int, int> alpha_coords;
  std::pair<int, int> beta_coords;
};

struct ParabolicData {
  std::vector<Root> unipotent;  ///< U_r: positive roots except alpha_r
  std::vector<Root> opposite;   ///< U_r^-: negative roots except -alpha_r
  std::pair<Root, Root> levi;   ///< (alpha_r, -alpha_r)
};

class RootSystem {
 public:
  /// Roots are ordered: positives by height then coordinates, then their
  /// negatives in the same order.
  explicit RootSystem(SystemLabel label);

  const SystemLabel& label() const { return label_; }
  int rank() const { return label_.rank; }
  std::size_t ambient_dimension() const { return ambient_; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& fundamentals() const { return fundamentals_; }
  std::vector<Root> positives() const;
  std::size_t size() const { return roots_.size(); }
  bool two_lengths() const { return label_.family != Family::A; }

  std::optional<std::size_t> index_of(const std::vector<int>& coords) const;
  std::size_t index_of(const Root& root) const;
  bool contains(const std::vector<int>& coords) const { return index_of(coords).has_value(); }
  const Root& root(std::size_t index) const { return roots_.at(index); }
  /// Throws std::invalid_argument when coords is not a root.
  const Root& root(const std::vector<int>& coords) const;

  Root negate(const Root& root) const;
  int inner(const std::vector<int>& x, const std::vector<int>& y) const;
  bool is_positive(const Root& root) const;
  /// Coefficients of root in the fundamental basis.
  std::vector<int> fundamental_coefficients(const Root& root) const;
  int height(const Root& root) const;

  std::optional<Root> add_roots(const Root& alpha, const Root& beta) const;
  /// All (i, j, i*alpha + j*beta) in Phi with i, j >= 1, sorted by i + j and
  /// then by decreasing i. Throws when alpha = +-beta.
  std::vector<StringTerm> root_string(const Root& alpha, const Root& beta) const;
  /// Reflection in the fundamental root with 1-based index r.
  Root reflect(const Root& root, int r) const;
  Rank2Embedding embed_rank2(const Root& alpha, const Root& beta) const;
  ParabolicData parabolic_data(int r) const;

  /// Checks that the roots are a multiple of each other.
  bool proportional(const Root& alpha, const Root& beta) const;

 private:
  Root make_root(std::vector<int> coords) const;

  SystemLabel label_;
  std::size_t ambient_ = 0;
  int long_norm_ = 0;
  std::vector<Root> roots_;
  std::vector<Root> fundamentals_;
  std::vector<std::vector<int>> coefficients_;
};

RootSystem build_root_system(const SystemLabel& label);

}  // namespace chevcomm
