#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adjc/weight.hpp"

namespace adjc {

/// Cartan–Killing type of a simple factor, e.g. {'E', 8}.
struct DynkinType {
  char letter = 'A';
  int rank = 1;

  std::string name() const;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

/// Parses "E8", "B5", "G2"; throws InvalidInput when malformed.
DynkinType parse_dynkin_type(const std::string& text);

/// Whether (letter, rank) names a simple type in its standard range.
bool is_valid_type(char letter, int rank);

/// Number of roots of a simple type.
std::size_t root_count(DynkinType type);
/// dim g = |roots| + rank.
int lie_algebra_dimension(DynkinType type);

/// Rewrites low-rank aliases into canonical names (B1 = C1 = A1, C2 = B2,
/// D2 = A1 x A1, D3 = A3, rank <= 0 and D1 vanish) and sorts the factors.
std::vector<DynkinType> normalize_factors(std::vector<DynkinType> factors);
std::string factors_name(const std::vector<DynkinType>& factors);

/// A root system in the standard orthonormal realization, simple roots in
/// Humphreys numbering. Roots are stored in canonical (lexicographic) order
/// and addressed by index.
class RootDatum {
 public:
  char type_letter() const { return type_.letter; }
  int rank() const { return type_.rank; }
  DynkinType type() const { return type_; }
  std::string name() const { return type_.name(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<WeightVector>& simple_roots() const { return simple_; }
  /// Simple root by 1-based node number.
  const WeightVector& simple_root(int node) const;
  const std::vector<WeightVector>& roots() const { return roots_; }
  std::size_t root_total() const { return roots_.size(); }
  const WeightVector& root(std::size_t idx) const { return roots_[idx]; }
  /// cartan_matrix()[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  std::optional<std::size_t> find_root(const WeightVector& v) const;
  /// Throws InvalidInput when v is not a root.
  std::size_t root_index(const WeightVector& v) const;
  bool is_root(const WeightVector& v) const { return find_root(v).has_value(); }

  /// Coefficients of a root in the simple-root basis.
  const std::vector<int>& coefficients(std::size_t idx) const { return coeffs_[idx]; }
  int height(std::size_t idx) const;
  bool is_positive(std::size_t idx) const { return height(idx) > 0; }
  const Rational& squared_length(std::size_t idx) const { return sqlen_[idx]; }
  const Rational& long_squared_length() const { return long_sqlen_; }
  bool is_long(std::size_t idx) const { return sqlen_[idx] == long_sqlen_; }

  /// Index of s_node(root idx), node 1-based.
  std::size_t reflect_root(int node, std::size_t idx) const;
  std::size_t negate_root(std::size_t idx) const { return negation_[idx]; }

  /// Coordinates of v in the simple-root basis; throws InvalidInput when v
  /// is outside the span of the roots.
  std::vector<Rational> simple_coordinates(const WeightVector& v) const;

  int lie_algebra_dimension() const { return static_cast<int>(roots_.size()) + rank(); }

 private:
  friend RootDatum build_root_system(char letter, int rank);

  DynkinType type_;
  std::size_t ambient_dim_ = 0;
  std::vector<WeightVector> simple_;
  std::vector<WeightVector> roots_;
  std::vector<std::vector<int>> coeffs_;
  std::vector<Rational> sqlen_;
  Rational long_sqlen_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<std::size_t>> reflection_table_;
  std::vector<std::size_t> negation_;
  std::vector<std::vector<Rational>> gram_inverse_;
};

/// Builds the root system by closing the simple roots under simple
/// reflections. Throws InvalidInput for ranks outside A1+, B2+, C3+, D4+,
/// E6-8, F4, G2.
RootDatum build_root_system(char letter, int rank);

/// 2(lambda, alpha)/(alpha, alpha), exact.
Rational coroot_pairing_exact(const WeightVector& lambda, const WeightVector& alpha);
/// <lambda, alpha^vee>; alpha must be a root of the datum and the pairing
/// integral (lambda in the weight lattice), otherwise InvalidInput.
long coroot_pairing(const RootDatum& datum, const WeightVector& lambda, const WeightVector& alpha);

std::size_t highest_root_index(const RootDatum& datum);
WeightVector highest_root(const RootDatum& datum);
std::vector<WeightVector> long_roots(const RootDatum& datum);
std::vector<std::size_t> long_root_indices(const RootDatum& datum);

/// Returns the irreducible factors of a closed root subsystem of the datum,
/// normalized and sorted. Simple roots are chosen with a generic functional
/// drawn from a fixed seed. Throws StructuralError when root_set is not a
/// closed subsystem.
std::vector<DynkinType> identify_type(const RootDatum& datum, std::span<const WeightVector> root_set);

}  // namespace adjc
