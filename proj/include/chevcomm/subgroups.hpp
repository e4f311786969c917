#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "chevcomm/enumerate.hpp"
#include "chevcomm/ring_matrix.hpp"
#include "chevcomm/rings.hpp"

namespace chevcomm {

/// Additive generators of an ideal: d_i e_i for every component with d_i < m_i.
/// x_alpha is additive in its parameter, so generator sets built from these
/// generate the same subgroups as those built from every ideal element.
std::vector<RingElem> additive_generators(const Ideal& ideal);

/// x_alpha(a) for the given roots and additive generators a of the ideal.
std::vector<GroupElem> root_generators(const Ambient& amb, const std::vector<std::size_t>& roots, const Ideal& ideal);
/// Generators of E(Phi, I).
std::vector<GroupElem> elementary_generators(const Ambient& amb, const Ideal& ideal);
/// Generators of E(Phi, R).
std::vector<GroupElem> absolute_generators(const Ambient& amb);
/// z_alpha(a, c) for every root, additive generator a of the ideal and c in cs.
std::vector<GroupElem> z_generators(const Ambient& amb, const Ideal& ideal, const std::vector<RingElem>& cs);
/// y_alpha(a, b) for the given roots and every a in A, b in B.
std::vector<GroupElem> y_generators(const Ambient& amb, const std::vector<std::size_t>& roots, const Ideal& a,
                                    const Ideal& b);

/// Every root index of the ambient system.
std::vector<std::size_t> all_roots(const Ambient& amb);

/// Product of `length` factors drawn uniformly from gens and their inverses.
GroupElem random_word(const Ambient& amb, const std::vector<GroupElem>& gens, std::size_t length, std::mt19937_64& rng);

EnumeratedSubgroup elementary_subgroup(const Ambient& amb, const Ideal& ideal, ClosureOptions options = {});

/// E(Phi, R, I), built twice: as the normal closure of E(Phi, I) under the
/// absolute generators, and as the closure of all z_alpha(a, c), c in R. Throws
/// CorrectnessError when the two sets differ. The result is checked to lie in
/// the level-I congruence kernel while it is generated.
EnumeratedSubgroup relative_elementary(const Ambient& amb, const Ideal& ideal, ClosureOptions options = {});

/// E(Phi, R, I) from z_alpha(a, c) with c restricted to a sample, then closed
/// under conjugation by the absolute generators.
EnumeratedSubgroup relative_elementary_sampled(const Ambient& amb, const Ideal& ideal, const std::vector<RingElem>& cs,
                                               ClosureOptions options = {});

struct MixedOptions {
  ClosureOptions closure;
  /// Random pairs (x, y) of words in the two generator sets whose commutator
  /// is checked to lie in the result.
  std::size_t samples = 64;
  std::size_t word_length = 8;
  std::uint64_t seed = 1;
};

/// [X, Y] for X = <S>, Y = <T>: the normal closure of {[s, t]} under S and T.
/// Neither X nor Y is enumerated. Throws CorrectnessError when a sampled
/// commutator of full words falls outside the result.
EnumeratedSubgroup mixed_commutator(const Ambient& amb, const std::vector<GroupElem>& s,
                                    const std::vector<GroupElem>& t, const MixedOptions& options = {});

}  // namespace chevcomm
