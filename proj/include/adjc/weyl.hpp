#pragma once

#include <map>
#include <span>
#include <vector>

#include "adjc/rootsys.hpp"

namespace adjc {

/// Word in simple reflections, 1-based node numbers. Applied left to right:
/// {i1, i2} acts as s_i2 s_i1.
struct ReflectionWord {
  std::vector<int> indices;

  std::size_t length() const { return indices.size(); }
  friend auto operator<=>(const ReflectionWord&, const ReflectionWord&) = default;
};

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
WeightVector reflect(const RootDatum& datum, int node, const WeightVector& lambda);
/// Reflection in an arbitrary nonzero vector.
WeightVector reflect_in(const WeightVector& alpha, const WeightVector& lambda);
WeightVector apply_word(const RootDatum& datum, const ReflectionWord& word, const WeightVector& lambda);
/// Same as apply_word restricted to roots, through the datum's reflection tables.
std::size_t apply_word_to_root(const RootDatum& datum, const ReflectionWord& word, std::size_t root_idx);

/// Breadth-first orbit of lambda under the simple reflections listed in
/// generators. Each element maps to its lexicographically smallest word
/// among the shortest ones.
std::map<WeightVector, ReflectionWord> orbit_with_witnesses(const RootDatum& datum, const WeightVector& lambda,
                                                            std::span<const int> generators);
/// Orbit under the full Weyl group.
std::map<WeightVector, ReflectionWord> orbit_with_witnesses(const RootDatum& datum, const WeightVector& lambda);

/// Partitions points into orbits of the group generated by the reflections
/// in generator_roots. Orbits are sorted internally and listed by their
/// smallest element. Throws InvalidInput if a generator is not a root.
std::vector<std::vector<WeightVector>> subgroup_orbit_partition(const RootDatum& datum,
                                                                std::span<const WeightVector> points,
                                                                std::span<const WeightVector> generator_roots);

}  // namespace adjc
