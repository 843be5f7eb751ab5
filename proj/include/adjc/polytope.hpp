#pragma once

#include <span>
#include <vector>

#include "adjc/rootsys.hpp"

namespace adjc {

struct WeightPolytope {
  std::vector<WeightVector> generating_points;
  std::vector<WeightVector> vertices;
};

/// Exact feasibility of p = sum c_q q, sum c_q = 1, c >= 0 over the given
/// points. Phase-one simplex over the rationals with Bland's rule.
bool in_convex_hull(const WeightVector& p, std::span<const WeightVector> points);

/// True iff p is not in the convex hull of point_set \ {p}. Throws
/// InvalidInput when p is not a member of point_set.
bool is_vertex(const WeightVector& p, std::span<const WeightVector> point_set);

WeightPolytope make_polytope(std::vector<WeightVector> points);
WeightPolytope root_polytope(const RootDatum& datum);

}  // namespace adjc
