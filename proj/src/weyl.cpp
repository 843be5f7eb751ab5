#include "adjc/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "adjc/errors.hpp"

namespace adjc {

WeightVector reflect(const RootDatum& datum, int node, const WeightVector& lambda) {
  return reflect_in(datum.simple_root(node), lambda);
}

WeightVector reflect_in(const WeightVector& alpha, const WeightVector& lambda) {
  return lambda - alpha * coroot_pairing_exact(lambda, alpha);
}

WeightVector apply_word(const RootDatum& datum, const ReflectionWord& word, const WeightVector& lambda) {
  WeightVector v = lambda;
  for (int i : word.indices) v = reflect(datum, i, v);
  return v;
}

std::size_t apply_word_to_root(const RootDatum& datum, const ReflectionWord& word, std::size_t root_idx) {
  for (int i : word.indices) root_idx = datum.reflect_root(i, root_idx);
  return root_idx;
}

std::map<WeightVector, ReflectionWord> orbit_with_witnesses(const RootDatum& datum, const WeightVector& lambda,
                                                            std::span<const int> generators) {
  std::vector<int> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int g : gens)
    if (g < 1 || g > datum.rank()) throw InvalidInput("generator index out of range");

  // FIFO order with ascending generators visits each depth layer in
  // lexicographic order of the words, so the first word found is the
  // lexicographically smallest shortest one.
  std::map<WeightVector, ReflectionWord> orbit;
  std::deque<WeightVector> queue;
  orbit.emplace(lambda, ReflectionWord{});
  queue.push_back(lambda);
  while (!queue.empty()) {
    WeightVector v = queue.front();
    queue.pop_front();
    const ReflectionWord word = orbit.at(v);
    for (int g : gens) {
      WeightVector w = reflect(datum, g, v);
      if (orbit.count(w)) continue;
      ReflectionWord next = word;
      next.indices.push_back(g);
      orbit.emplace(w, std::move(next));
      queue.push_back(std::move(w));
    }
  }
  return orbit;
}

std::map<WeightVector, ReflectionWord> orbit_with_witnesses(const RootDatum& datum, const WeightVector& lambda) {
  std::vector<int> all(static_cast<std::size_t>(datum.rank()));
  std::iota(all.begin(), all.end(), 1);
  return orbit_with_witnesses(datum, lambda, all);
}

std::vector<std::vector<WeightVector>> subgroup_orbit_partition(const RootDatum& datum,
                                                                std::span<const WeightVector> points,
                                                                std::span<const WeightVector> generator_roots) {
  for (const auto& g : generator_roots)
    if (!datum.is_root(g)) throw InvalidInput(g.to_string() + " is not a root of " + datum.name());

  // A root and its negative give the same reflection.
  std::vector<WeightVector> gens;
  for (const auto& g : generator_roots)
    if (std::find(gens.begin(), gens.end(), -g) == gens.end() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);

  std::set<WeightVector> remaining(points.begin(), points.end());
  std::vector<std::vector<WeightVector>> parts;
  while (!remaining.empty()) {
    const WeightVector seed = *remaining.begin();
    std::set<WeightVector> orbit{seed};
    std::deque<WeightVector> queue{seed};
    while (!queue.empty()) {
      WeightVector v = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        WeightVector w = reflect_in(g, v);
        if (orbit.insert(w).second) queue.push_back(std::move(w));
      }
    }
    std::vector<WeightVector> part;
    for (const auto& v : orbit)
      if (remaining.erase(v)) part.push_back(v);
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace adjc
