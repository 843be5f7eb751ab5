#pragma once

#include <string>
#include <vector>

#include "adjc/rootsys.hpp"
#include "adjc/weyl.hpp"

namespace adjc {

/// Marked Dynkin nodes I (1-based, sorted) defining the parabolic P.
struct ParabolicChoice {
  std::vector<int> marked_nodes;
};

/// An H-fixed point of the adjoint variety, labelled by its long root.
struct FixedPoint {
  WeightVector weight;     // mu_L = w(beta)
  ReflectionWord witness;  // w with w(beta) = weight
  std::size_t root_index = 0;
};

ParabolicChoice adjoint_parabolic(const RootDatum& datum);

/// dim G/P = |Phi+ \ Phi+(D \ I)|.
int gp_dimension(const RootDatum& datum, const ParabolicChoice& parabolic);

/// Indices of Phi+ \ Phi+(D \ I): positive roots with a positive
/// coefficient on some marked node.
std::vector<std::size_t> unipotent_root_indices(const RootDatum& datum, const ParabolicChoice& parabolic);

std::vector<FixedPoint> adjoint_fixed_points(const RootDatum& datum);

/// Tangent compass at wP, oriented towards the polytope of fixed points:
/// { -w(gamma) : gamma in Phi+ \ Phi+(D \ I) }. At the base point this is
/// minus the unipotent radical, so the entry opposite to the weight of L
/// appears, and mu + nu stays inside the root polytope.
Compass compass_at(const RootDatum& datum, const ParabolicChoice& parabolic, const ReflectionWord& word);

/// Fixed points and compasses of X_G under the maximal torus.
struct AdjointVariety {
  ParabolicChoice parabolic;
  int dimension = 0;
  std::vector<FixedPoint> points;  // sorted by weight
  std::vector<Compass> compasses;  // parallel to points
};

AdjointVariety make_adjoint_variety(const RootDatum& datum);

struct ContactViolation {
  WeightVector point;
  WeightVector entry;
  std::string what;
};

struct ContactReport {
  std::size_t points_checked = 0;
  int compass_size = 0;
  std::vector<ContactViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// At every fixed point of weight gamma: -gamma has multiplicity one, and
/// the weights of the contact distribution (negated compass entries other
/// than -gamma) are invariant under m -> gamma - m.
ContactReport contact_compass_checks(const RootDatum& datum, const AdjointVariety& variety);
ContactReport contact_compass_checks(const RootDatum& datum);

}  // namespace adjc
