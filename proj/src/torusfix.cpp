#include "adjc/torusfix.hpp"

#include <algorithm>

#include "adjc/errors.hpp"

namespace adjc {

ParabolicChoice adjoint_parabolic(const RootDatum& datum) {
  const WeightVector beta = highest_root(datum);
  ParabolicChoice p;
  for (int i = 1; i <= datum.rank(); ++i)
    if (coroot_pairing(datum, beta, datum.simple_root(i)) != 0) p.marked_nodes.push_back(i);
  return p;
}

static void validate(const RootDatum& datum, const ParabolicChoice& parabolic) {
  if (parabolic.marked_nodes.empty()) throw InvalidInput("parabolic needs at least one marked node");
  for (int n : parabolic.marked_nodes)
    if (n < 1 || n > datum.rank()) throw InvalidInput("marked node out of range");
}

std::vector<std::size_t> unipotent_root_indices(const RootDatum& datum, const ParabolicChoice& parabolic) {
  validate(datum, parabolic);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < datum.root_total(); ++k) {
    if (!datum.is_positive(k)) continue;
    const auto& c = datum.coefficients(k);
    for (int n : parabolic.marked_nodes)
      if (c[static_cast<std::size_t>(n - 1)] > 0) {
        out.push_back(k);
        break;
      }
  }
  return out;
}

int gp_dimension(const RootDatum& datum, const ParabolicChoice& parabolic) {
  return static_cast<int>(unipotent_root_indices(datum, parabolic).size());
}

std::vector<FixedPoint> adjoint_fixed_points(const RootDatum& datum) {
  const auto orbit = orbit_with_witnesses(datum, highest_root(datum));
  std::vector<FixedPoint> points;
  points.reserve(orbit.size());
  for (const auto& [weight, word] : orbit) points.push_back({weight, word, datum.root_index(weight)});
  return points;
}

Compass compass_at(const RootDatum& datum, const ParabolicChoice& parabolic, const ReflectionWord& word) {
  Compass c;
  for (auto k : unipotent_root_indices(datum, parabolic))
    c.add(datum.root(datum.negate_root(apply_word_to_root(datum, word, k))));
  return c;
}

AdjointVariety make_adjoint_variety(const RootDatum& datum) {
  AdjointVariety x;
  x.parabolic = adjoint_parabolic(datum);
  const auto unipotent = unipotent_root_indices(datum, x.parabolic);
  x.dimension = static_cast<int>(unipotent.size());
  x.points = adjoint_fixed_points(datum);
  x.compasses.reserve(x.points.size());
  for (const auto& p : x.points) {
    Compass c;
    for (auto k : unipotent) c.add(datum.root(datum.negate_root(apply_word_to_root(datum, p.witness, k))));
    x.compasses.push_back(std::move(c));
  }
  return x;
}

ContactReport contact_compass_checks(const RootDatum& datum, const AdjointVariety& variety) {
  const char t = datum.type_letter();
  if (t == 'A' || t == 'C')
    throw InvalidInput("contact checks need the contact line bundle to generate Pic; not available for " + datum.name());
  ContactReport report;
  report.compass_size = variety.dimension;
  for (std::size_t p = 0; p < variety.points.size(); ++p) {
    const auto& gamma = variety.points[p].weight;
    const auto& compass = variety.compasses[p];
    ++report.points_checked;
    if (compass.total() != variety.dimension)
      report.violations.push_back({gamma, gamma, "compass size " + std::to_string(compass.total())});
    const WeightVector minus_gamma = -gamma;
    const int m = compass.multiplicity(minus_gamma);
    if (m != 1)
      report.violations.push_back({gamma, minus_gamma, "multiplicity of -gamma is " + std::to_string(m)});
    for (const auto& [entry, mult] : compass.entries()) {
      if (entry == minus_gamma) continue;
      // F-weight f = -entry; its partner gamma - f corresponds to entry -gamma - entry.
      const WeightVector partner = minus_gamma - entry;
      if (compass.multiplicity(partner) != mult)
        report.violations.push_back({gamma, entry, "contact partner " + partner.to_string() + " missing"});
    }
  }
  return report;
}

ContactReport contact_compass_checks(const RootDatum& datum) {
  return contact_compass_checks(datum, make_adjoint_variety(datum));
}

}  // namespace adjc
