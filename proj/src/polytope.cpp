#include "adjc/polytope.hpp"

#include <algorithm>

#include "adjc/errors.hpp"

namespace adjc {

namespace {

// Dense tableau for: A x = b, x >= 0, b >= 0, one artificial per row.
// Minimizes the sum of artificials and reports whether it reaches zero.
bool phase_one_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i)
    if (sgn(b[i]) < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-one objective (minimize sum of artificials).
  std::vector<Rational> cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= n && j < cols) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  }

  for (;;) {
    // Bland: lowest-index column with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one

    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // cost[cols] holds minus the objective value.
  return sgn(cost[cols]) == 0;
}

}  // namespace

bool in_convex_hull(const WeightVector& p, std::span<const WeightVector> points) {
  if (points.empty()) return false;
  const std::size_t d = p.dim();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].dim() != d) throw InvalidInput("points of mixed dimension");
    for (std::size_t k = 0; k < d; ++k) a[k][j] = points[j][k];
    a[d][j] = 1;
  }
  for (std::size_t k = 0; k < d; ++k) b[k] = p[k];
  b[d] = 1;
  return phase_one_feasible(std::move(a), std::move(b));
}

bool is_vertex(const WeightVector& p, std::span<const WeightVector> point_set) {
  std::vector<WeightVector> others;
  bool member = false;
  for (const auto& q : point_set) {
    if (q == p) {
      member = true;
      continue;
    }
    others.push_back(q);
  }
  if (!member) throw InvalidInput(p.to_string() + " is not in the point set");
  return !in_convex_hull(p, others);
}

WeightPolytope make_polytope(std::vector<WeightVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  WeightPolytope poly;
  poly.generating_points = std::move(points);
  for (const auto& p : poly.generating_points)
    if (is_vertex(p, poly.generating_points)) poly.vertices.push_back(p);
  return poly;
}

WeightPolytope root_polytope(const RootDatum& datum) { return make_polytope(datum.roots()); }

}  // namespace adjc
