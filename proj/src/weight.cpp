#include "adjc/weight.hpp"

#include <sstream>

#include "adjc/errors.hpp"

namespace adjc {

const char* lattice_name(Lattice lattice) {
  switch (lattice) {
    case Lattice::Ambient: return "M(H)";
    case Lattice::Rank2: return "M(H2)";
    case Lattice::Rank1: return "M(H1)";
  }
  return "?";
}

WeightVector::WeightVector(std::vector<Rational> coords, Lattice lattice)
    : coords_(std::move(coords)), lattice_(lattice) {}

WeightVector::WeightVector(std::initializer_list<long> coords, Lattice lattice) : lattice_(lattice) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

WeightVector WeightVector::zero(std::size_t dim, Lattice lattice) {
  return WeightVector(std::vector<Rational>(dim), lattice);
}

bool WeightVector::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool WeightVector::is_integral() const {
  for (const auto& c : coords_)
    if (c.get_den() != 1) return false;
  return true;
}

static void check_compatible(const WeightVector& a, const WeightVector& b) {
  if (a.dim() != b.dim() || a.lattice() != b.lattice())
    throw InvalidInput("weight vectors of different lattices or dimensions: " + a.to_string() +
                       " vs " + b.to_string());
}

WeightVector& WeightVector::operator+=(const WeightVector& other) {
  check_compatible(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other) {
  check_compatible(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

WeightVector& WeightVector::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

WeightVector WeightVector::operator-() const {
  WeightVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

bool operator==(const WeightVector& a, const WeightVector& b) {
  return a.lattice_ == b.lattice_ && a.coords_ == b.coords_;
}

bool operator<(const WeightVector& a, const WeightVector& b) {
  if (a.lattice_ != b.lattice_) return a.lattice_ < b.lattice_;
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i].get_str();
  }
  os << ')';
  return os.str();
}

Rational dot(const WeightVector& a, const WeightVector& b) {
  if (a.dim() != b.dim()) throw InvalidInput("dot product of vectors of different dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

void Compass::add(const WeightVector& weight, int multiplicity) {
  if (multiplicity <= 0) throw InvalidInput("compass multiplicity must be positive");
  if (weight.is_zero()) throw InvalidInput("compass entries must be nonzero");
  entries_[weight] += multiplicity;
}

int Compass::multiplicity(const WeightVector& weight) const {
  auto it = entries_.find(weight);
  return it == entries_.end() ? 0 : it->second;
}

int Compass::total() const {
  int t = 0;
  for (const auto& [w, m] : entries_) t += m;
  return t;
}

std::string Compass::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, m] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << w.to_string();
    if (m != 1) os << '^' << m;
  }
  os << '}';
  return os.str();
}

}  // namespace adjc
