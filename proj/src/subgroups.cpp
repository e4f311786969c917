#include "chevcomm/subgroups.hpp"

namespace chevcomm {

std::vector<RingElem> additive_generators(const Ideal& ideal) {
  const FiniteRing& ring = ideal.ring();
  std::vector<RingElem> out;
  for (std::size_t c = 0; c < ring.components(); ++c) {
    const int d = ideal.component_levels()[c];
    if (d == ring.moduli()[c]) continue;
    std::vector<int> r(ring.components(), 0);
    r[c] = d;
    out.push_back(ring.from_residues(r));
  }
  return out;
}

std::vector<std::size_t> all_roots(const Ambient& amb) {
  std::vector<std::size_t> out(amb.system().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<GroupElem> root_generators(const Ambient& amb, const std::vector<std::size_t>& roots, const Ideal& ideal) {
  std::vector<GroupElem> out;
  const auto gens = additive_generators(ideal);
  for (std::size_t r : roots) {
    for (const auto& a : gens) out.push_back(amb.x(r, a));
  }
  return out;
}

std::vector<GroupElem> elementary_generators(const Ambient& amb, const Ideal& ideal) {
  return root_generators(amb, all_roots(amb), ideal);
}

std::vector<GroupElem> absolute_generators(const Ambient& amb) {
  return elementary_generators(amb, unit_ideal(amb.ring()));
}

std::vector<GroupElem> z_generators(const Ambient& amb, const Ideal& ideal, const std::vector<RingElem>& cs) {
  std::vector<GroupElem> out;
  const auto gens = additive_generators(ideal);
  for (std::size_t r = 0; r < amb.system().size(); ++r) {
    for (const auto& a : gens) {
      for (const auto& c : cs) out.push_back(amb.z(r, a, c));
    }
  }
  return out;
}

std::vector<GroupElem> y_generators(const Ambient& amb, const std::vector<std::size_t>& roots, const Ideal& a,
                                    const Ideal& b) {
  std::vector<GroupElem> out;
  for (std::size_t r : roots) {
    for (const auto& x : a.elements()) {
      for (const auto& y : b.elements()) out.push_back(amb.y(r, x, y));
    }
  }
  return out;
}

GroupElem random_word(const Ambient& amb, const std::vector<GroupElem>& gens, std::size_t length, std::mt19937_64& rng) {
  GroupElem out = amb.identity();
  if (gens.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t i = pick(rng);
    const GroupElem& g = gens[i / 2];
    out = amb.mul(out, i % 2 == 0 ? g : amb.inverse(g));
  }
  return out;
}

EnumeratedSubgroup elementary_subgroup(const Ambient& amb, const Ideal& ideal, ClosureOptions options) {
  return closure(amb.space(), elementary_generators(amb, ideal), std::move(options));
}

EnumeratedSubgroup relative_elementary(const Ambient& amb, const Ideal& ideal, ClosureOptions options) {
  options.level = ideal;
  EnumeratedSubgroup normal = closure(amb.space(), elementary_generators(amb, ideal), options);
  normal.normalize(absolute_generators(amb));
  EnumeratedSubgroup via_z = closure(amb.space(), z_generators(amb, ideal, amb.ring().elements()), options);
  if (!normal.complete() || !via_z.complete()) return normal.complete() ? via_z : normal;
  if (!normal.same_set(via_z)) {
    throw CorrectnessError("E(R,I) constructions disagree for I = " + ideal.describe() + " in " + amb.describe() +
                           ": normal closure has " + std::to_string(normal.size()) + " elements, z-generators give " +
                           std::to_string(via_z.size()));
  }
  return normal;
}

EnumeratedSubgroup relative_elementary_sampled(const Ambient& amb, const Ideal& ideal, const std::vector<RingElem>& cs,
                                               ClosureOptions options) {
  options.level = ideal;
  EnumeratedSubgroup out = closure(amb.space(), z_generators(amb, ideal, cs), options);
  out.normalize(absolute_generators(amb));
  return out;
}

EnumeratedSubgroup mixed_commutator(const Ambient& amb, const std::vector<GroupElem>& s,
                                    const std::vector<GroupElem>& t, const MixedOptions& options) {
  const MatrixSpace& space = amb.space();
  EnumeratedSubgroup out(space, options.closure);

  const long long pairs = static_cast<long long>(s.size() * t.size());
  std::vector<GroupElem> seeds(static_cast<std::size_t>(pairs));
#pragma omp parallel for schedule(static) if (options.closure.parallel && pairs > 64)
  for (long long k = 0; k < pairs; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / t.size();
    const std::size_t j = static_cast<std::size_t>(k) % t.size();
    seeds[static_cast<std::size_t>(k)] = amb.commutator(s[i], t[j]);
  }
  for (const auto& g : seeds) {
    out.add_generator(g);
    if (!out.complete()) return out;
  }

  std::vector<GroupElem> conjugators = s;
  conjugators.insert(conjugators.end(), t.begin(), t.end());
  out.normalize(conjugators);
  if (!out.complete()) return out;

  std::mt19937_64 rng(options.seed);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const GroupElem x = random_word(amb, s, options.word_length, rng);
    const GroupElem y = random_word(amb, t, options.word_length, rng);
    const GroupElem c = amb.commutator(x, y);
    if (!out.member(c)) {
      throw CorrectnessError("sampled commutator outside the mixed commutator subgroup in " + amb.describe() + ": " +
                             space.format(c.mat));
    }
  }
  return out;
}

}  // namespace chevcomm
