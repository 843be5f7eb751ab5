#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "adjc/torusfix.hpp"

namespace adjc {

/// Rational linear map between weight lattices, acting on coordinates.
class Projection {
 public:
  Projection() = default;
  Projection(Lattice source, Lattice target, std::vector<std::vector<Rational>> matrix);

  Lattice source() const { return source_; }
  Lattice target() const { return target_; }
  std::size_t source_dim() const { return matrix_.empty() ? 0 : matrix_[0].size(); }
  std::size_t target_dim() const { return matrix_.size(); }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }

  WeightVector apply(const WeightVector& v) const;

  /// Roots of the source datum mapped to zero, sorted. Filled by the
  /// constructors below.
  std::vector<WeightVector> kernel_roots;

 private:
  Lattice source_ = Lattice::Ambient;
  Lattice target_ = Lattice::Ambient;
  std::vector<std::vector<Rational>> matrix_;
};

/// outer after inner.
Projection compose(const Projection& outer, const Projection& inner);
/// Recomputes kernel_roots of a projection out of the ambient lattice.
void attach_kernel_roots(const RootDatum& datum, Projection& projection);

/// The six roots and six short interior points of the hexagon, in the basis
/// (alpha_0, beta_0) of M(H2). Indices are taken mod 6.
struct HexagonFrame {
  std::array<WeightVector, 6> alpha;
  std::array<WeightVector, 6> beta;
  /// Invariant form on M(H2) in the same basis.
  std::array<std::array<Rational, 2>, 2> gram;

  const WeightVector& a(int i) const { return alpha[static_cast<std::size_t>(((i % 6) + 6) % 6)]; }
  const WeightVector& b(int i) const { return beta[static_cast<std::size_t>(((i % 6) + 6) % 6)]; }
  Rational inner(const WeightVector& x, const WeightVector& y) const;
};

struct HexagonDowngrade {
  Projection projection;  // Ambient -> Rank2
  HexagonFrame frame;
  /// Long roots a, b of G spanning the image, at angle 2pi/3.
  WeightVector root_i;
  WeightVector root_j;
  /// Simple-root nodes of the pair, or {0, 0} for G2 where the pair is
  /// (alpha_2, 3 alpha_1 + alpha_2).
  std::array<int, 2> nodes{0, 0};
};

/// Throws InvalidInput for types A and C.
HexagonDowngrade s2_projection(const RootDatum& datum);

/// pi_k with beta_k -> 0 and alpha_{k-1} -> 2 (Rank2 -> Rank1).
std::array<Projection, 6> s1_projections(const HexagonFrame& frame);

/// The composite pi_k o iota*, with kernel roots attached.
Projection line_projection(const RootDatum& datum, const HexagonDowngrade& hex, int k);

struct GradedPiece {
  int dimension = 0;
  std::vector<WeightVector> roots;
};
using GradedDecomposition = std::map<WeightVector, GradedPiece>;

GradedDecomposition grade_algebra(const RootDatum& datum, const Projection& projection);
int total_dimension(const GradedDecomposition& grading);

/// Factors of g0^ss, i.e. of the roots in the kernel.
std::vector<DynkinType> zero_part_type(const RootDatum& datum, const Projection& projection);

/// A fixed component of the subtorus dual to the projection.
struct ComponentRecord {
  WeightVector weight;                 // projected weight of L
  std::vector<WeightVector> members;   // long roots = H-fixed points, sorted
  int dimension = 0;
  Compass compass;                     // nonzero projected compass entries
};

/// Sorted by (weight, first member). Throws ConsistencyError if members of
/// one orbit disagree on dimension or compass.
std::vector<ComponentRecord> fixed_components(const RootDatum& datum, const AdjointVariety& variety,
                                              const Projection& projection);
std::vector<ComponentRecord> fixed_components(const RootDatum& datum, const Projection& projection);

std::vector<ComponentRecord> components_at(const std::vector<ComponentRecord>& components,
                                           const WeightVector& weight);
std::vector<int> component_dimensions(const std::vector<ComponentRecord>& components);

struct CellCheck {
  std::string cell;
  std::string expected_variety;
  std::vector<int> expected_dims;
  std::vector<int> actual_dims;
  /// Downgrade indices (0..5) whose components disagree with expected_dims.
  std::vector<int> failing_indices;

  bool ok() const { return failing_indices.empty() && expected_dims == actual_dims; }
};

struct FreudenthalReport {
  std::string group;
  std::vector<CellCheck> cells;

  bool ok() const;
};

/// X_G against gp_dimension; Z_m, Z_0 at weights 1, 0 of every pi_k;
/// Y_m, Y_0 at beta_k and 0 of the hexagon, for all six k.
FreudenthalReport verify_freudenthal_table(const RootDatum& datum);

struct CompassCheck {
  std::string component;  // "y_0", "Y_beta_2[1]", "Y_0[0]", ...
  Compass expected;
  Compass actual;

  bool ok() const { return expected == actual; }
};

/// (multiplicity, dim X, dim Y_0, codim) for one Y_0 component.
struct Y0Row {
  int multiplicity = 0;
  int dim_x = 0;
  int dim_y = 0;
  int codim = 0;

  friend bool operator==(const Y0Row&, const Y0Row&) = default;
};

struct HexagonReport {
  std::string group;
  int n = 0;
  std::vector<CompassCheck> checks;
  std::vector<Y0Row> y0_rows;
  std::vector<std::string> problems;

  bool ok() const;
};

/// Every H2-component compass against the closed formulas at vertices,
/// at the beta_i and at 0.
HexagonReport verify_hexagon_compasses(const RootDatum& datum);

/// Expected compass at the fixed point over alpha_i.
Compass vertex_compass_formula(const HexagonFrame& frame, int i, int n);
/// Expected compass of a component of dimension d over beta_i.
Compass beta_compass_formula(const HexagonFrame& frame, int i, int n, int d);
/// Expected compass of a component of dimension d over 0; throws
/// ConsistencyError when 6 does not divide 2n + 1 - d.
Compass zero_compass_formula(const HexagonFrame& frame, int n, int d);

/// n with dim X_G = 2n + 1.
int contact_half_dimension(const RootDatum& datum);

}  // namespace adjc
