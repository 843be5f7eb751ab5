#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace adjc {

using Rational = mpq_class;

/// Which character lattice a vector lives in: M(H) of the maximal torus,
/// M(H2) of the rank-two hexagon torus, or M(H1) of a rank-one subtorus.
enum class Lattice : unsigned char { Ambient, Rank2, Rank1 };

const char* lattice_name(Lattice lattice);

/// Exact rational coordinate vector tagged with its lattice.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> coords, Lattice lattice = Lattice::Ambient);
  WeightVector(std::initializer_list<long> coords, Lattice lattice = Lattice::Ambient);

  static WeightVector zero(std::size_t dim, Lattice lattice = Lattice::Ambient);

  std::size_t dim() const { return coords_.size(); }
  Lattice lattice() const { return lattice_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;

  WeightVector& operator+=(const WeightVector& other);
  WeightVector& operator-=(const WeightVector& other);
  WeightVector& operator*=(const Rational& scalar);

  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(WeightVector a, const Rational& s) { return a *= s; }
  friend WeightVector operator*(const Rational& s, WeightVector a) { return a *= s; }
  WeightVector operator-() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b);
  friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }
  /// Lexicographic on (lattice, coordinates); the canonical order used for
  /// every sorted output.
  friend bool operator<(const WeightVector& a, const WeightVector& b);

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
  Lattice lattice_ = Lattice::Ambient;
};

/// Euclidean inner product of coordinates.
Rational dot(const WeightVector& a, const WeightVector& b);

/// Multiset of nonzero weights. Entries are kept canonically sorted, so two
/// compasses compare equal iff they agree entry-for-entry with multiplicity.
class Compass {
 public:
  using Entries = std::map<WeightVector, int>;

  Compass() = default;

  void add(const WeightVector& weight, int multiplicity = 1);
  int multiplicity(const WeightVector& weight) const;
  int total() const;
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entries& entries() const { return entries_; }

  friend bool operator==(const Compass& a, const Compass& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Compass& a, const Compass& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Entries entries_;
};

}  // namespace adjc
