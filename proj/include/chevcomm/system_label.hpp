#pragma once

#include <string>
#include <string_view>

namespace chevcomm {

enum class Family { A, C, G };

/// Cartan type and rank of a supported root system: A_l (l >= 2), C_l (l >= 2), G2.
struct SystemLabel {
  Family family = Family::A;
  int rank = 2;

  /// Parses "A2", "A_3", "C2", "G2". Throws std::invalid_argument for other
  /// families (B, D, E, F): all arguments in this library reduce to rank-2
  /// subsystems of type A2, C2 and G2, whose ambient types are the ones built.
  static SystemLabel parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const SystemLabel&, const SystemLabel&) = default;
};

}  // namespace chevcomm
