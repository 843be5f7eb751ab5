#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adjc/downgrade.hpp"

namespace adjc {

/// Integer values on the simple roots; a cocharacter of H.
struct Covector {
  std::vector<long> values;

  friend bool operator==(const Covector&, const Covector&) = default;
};

/// Value on a root of the datum.
long pair_root(const RootDatum& datum, const Covector& covector, std::size_t root_idx);
long pair_root(const RootDatum& datum, const Covector& covector, const WeightVector& root);
/// Nonzero on every root.
bool is_generic(const RootDatum& datum, const Covector& covector);
/// Values of a rank-one projection on the simple roots; throws
/// InvalidInput when they are not integral.
Covector covector_of(const RootDatum& datum, const Projection& line);

/// Deterministic sequence of distinct generic covectors with entries in
/// [-9, 9] \ {0}.
std::vector<Covector> generic_covectors(const RootDatum& datum, std::uint64_t seed, std::size_t count);

/// Isolated fixed points of a generic one-parameter subgroup.
struct OneParamAction {
  int dimension = 0;
  std::vector<long> weights;                 // parallel to the variety's points
  std::vector<std::map<long, int>> compasses;
  std::vector<int> nu_plus;
  std::vector<int> nu_minus;
};

/// Throws NonGenericCovector when the covector vanishes on a root.
OneParamAction downgrade_to_line(const RootDatum& datum, const AdjointVariety& variety, const Covector& covector);

/// Weights of the fixed points without any genericity requirement.
std::vector<long> fixed_point_weights(const RootDatum& datum, const AdjointVariety& variety, const Covector& covector);
long bandwidth(const std::vector<long>& weights);

/// b_0, b_2, ..., b_{2 dim}.
std::vector<int> betti_numbers(const OneParamAction& action);

/// One point of the torus, a rational value per simple root.
using TorusPoint = std::vector<Rational>;

/// Sum over fixed points of t^mu / prod (1 - t^nu) over the compass.
/// Throws PoleEncountered when some t^nu equals 1.
Rational localized_character(const RootDatum& datum, const AdjointVariety& variety, const TorusPoint& t);
/// Sum of t^alpha over the roots, plus the rank.
Rational adjoint_character(const RootDatum& datum, const TorusPoint& t);
/// Points in {2, ..., 10}^rank drawn from the seed, skipping poles.
std::vector<TorusPoint> evaluation_points(const RootDatum& datum, std::uint64_t seed, std::size_t count);

/// Action of H2/H1 on one H1-fixed component.
struct SubtorusProfile {
  int dimension = 0;
  int bandwidth = 0;
  Rational min_weight;
  Rational max_weight;
  std::vector<int> source_dims;  // H2-components at the maximum
  std::vector<int> sink_dims;    // H2-components at the minimum
  bool equalized = false;        // normal weights at both extremes are +-1
};

struct LineProfile {
  int index = 0;
  int z1_count = 0;
  SubtorusProfile z1;
  std::map<long, int> z1_residual;  // H1-compass of Z_1
  std::vector<SubtorusProfile> z0;
};

struct BandwidthReport {
  std::string group;
  int n = 0;
  std::vector<LineProfile> lines;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// For each of the six rank-one downgradings: Z_1 is unique of dimension
/// n - 1, with bandwidth 3, isolated extremes, residual compass
/// {-2, (-1)^n, 1} and equalized extremes; every Z_0 component has
/// bandwidth 2, extremes at weights -1 and 1 of dimension (dim Z_0 - 1)/2,
/// equalized.
BandwidthReport bandwidth_and_equalization(const RootDatum& datum);

}  // namespace adjc
