#include "adjc/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "adjc/errors.hpp"

namespace adjc {

std::string DynkinType::name() const { return std::string(1, letter) + std::to_string(rank); }

DynkinType parse_dynkin_type(const std::string& text) {
  if (text.size() < 2) throw InvalidInput("malformed Dynkin type '" + text + "'");
  char letter = text[0];
  if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9' || rank > 1000)
      throw InvalidInput("malformed Dynkin type '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
  }
  return {letter, rank};
}

bool is_valid_type(char letter, int rank) {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::size_t root_count(DynkinType t) {
  const auto r = static_cast<std::size_t>(t.rank);
  switch (t.letter) {
    case 'A': return r * (r + 1);
    case 'B':
    case 'C': return 2 * r * r;
    case 'D': return 2 * r * (r - 1);
    case 'E': return r == 6 ? 72 : r == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: throw InvalidInput("unknown type letter");
  }
}

int lie_algebra_dimension(DynkinType t) { return static_cast<int>(root_count(t)) + t.rank; }

std::vector<DynkinType> normalize_factors(std::vector<DynkinType> factors) {
  std::vector<DynkinType> out;
  for (auto f : factors) {
    if (f.rank <= 0) continue;
    switch (f.letter) {
      case 'B':
      case 'C':
        if (f.rank == 1) f = {'A', 1};
        else if (f.rank == 2) f = {'B', 2};
        out.push_back(f);
        break;
      case 'D':
        if (f.rank == 1) break;
        if (f.rank == 2) {
          out.push_back({'A', 1});
          out.push_back({'A', 1});
        } else if (f.rank == 3) {
          out.push_back({'A', 3});
        } else {
          out.push_back(f);
        }
        break;
      default: out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string factors_name(const std::vector<DynkinType>& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += 'x';
    s += factors[i].name();
  }
  return s;
}

namespace {

WeightVector unit(std::size_t dim, std::size_t i, long scale = 1) {
  auto v = WeightVector::zero(dim);
  v[i] = scale;
  return v;
}

WeightVector diff(std::size_t dim, std::size_t i, std::size_t j) { return unit(dim, i) - unit(dim, j); }

std::vector<WeightVector> simple_roots_for(char letter, int rank) {
  std::vector<WeightVector> s;
  const auto r = static_cast<std::size_t>(rank);
  switch (letter) {
    case 'A':
      for (std::size_t i = 0; i < r; ++i) s.push_back(diff(r + 1, i, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (std::size_t i = 0; i + 1 < r; ++i) s.push_back(diff(r, i, i + 1));
      if (letter == 'B') s.push_back(unit(r, r - 1));
      if (letter == 'C') s.push_back(unit(r, r - 1, 2));
      if (letter == 'D') s.push_back(unit(r, r - 2) + unit(r, r - 1));
      break;
    case 'E': {
      const std::size_t d = 8;
      auto a1 = WeightVector::zero(d);
      for (std::size_t i = 0; i < d; ++i) a1[i] = Rational(-1, 2);
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      s.push_back(a1);
      s.push_back(unit(d, 0) + unit(d, 1));
      for (std::size_t i = 1; i + 2 <= r; ++i) s.push_back(diff(d, i, i - 1));
      break;
    }
    case 'F': {
      s.push_back(diff(4, 1, 2));
      s.push_back(diff(4, 2, 3));
      s.push_back(unit(4, 3));
      WeightVector a4{0, 0, 0, 0};
      a4[0] = Rational(1, 2);
      for (std::size_t i = 1; i < 4; ++i) a4[i] = Rational(-1, 2);
      s.push_back(a4);
      break;
    }
    case 'G':
      s.push_back(WeightVector{1, -1, 0});
      s.push_back(WeightVector{-2, 1, 1});
      break;
    default: break;
  }
  return s;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw ConsistencyError("singular Gram matrix of simple roots");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      Rational f = m[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[row][k] -= f * m[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace

Rational coroot_pairing_exact(const WeightVector& lambda, const WeightVector& alpha) {
  Rational len = dot(alpha, alpha);
  if (sgn(len) == 0) throw InvalidInput("pairing with the zero vector");
  return 2 * dot(lambda, alpha) / len;
}

long coroot_pairing(const RootDatum& datum, const WeightVector& lambda, const WeightVector& alpha) {
  if (!datum.is_root(alpha)) throw InvalidInput(alpha.to_string() + " is not a root of " + datum.name());
  Rational p = coroot_pairing_exact(lambda, alpha);
  if (p.get_den() != 1) throw InvalidInput(lambda.to_string() + " is not in the weight lattice");
  return p.get_num().get_si();
}

RootDatum build_root_system(char letter, int rank) {
  if (!is_valid_type(letter, rank))
    throw InvalidInput("unsupported root system " + std::string(1, letter) + std::to_string(rank));

  RootDatum d;
  d.type_ = {letter, rank};
  d.simple_ = simple_roots_for(letter, rank);
  d.ambient_dim_ = d.simple_.front().dim();
  const auto r = static_cast<std::size_t>(rank);

  d.cartan_.assign(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      d.cartan_[i][j] = static_cast<int>(coroot_pairing_exact(d.simple_[i], d.simple_[j]).get_num().get_si());

  // Closure under simple reflections, tracking simple-root coefficients.
  std::map<WeightVector, std::vector<int>> found;
  std::deque<WeightVector> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    found.emplace(d.simple_[i], c);
    queue.push_back(d.simple_[i]);
  }
  while (!queue.empty()) {
    WeightVector v = queue.front();
    queue.pop_front();
    const std::vector<int> c = found.at(v);
    for (std::size_t i = 0; i < r; ++i) {
      Rational p = coroot_pairing_exact(v, d.simple_[i]);
      if (sgn(p) == 0) continue;
      WeightVector w = v - d.simple_[i] * p;
      if (found.count(w)) continue;
      std::vector<int> cw = c;
      cw[i] -= static_cast<int>(p.get_num().get_si());
      found.emplace(w, cw);
      queue.push_back(std::move(w));
    }
  }

  for (auto& [v, c] : found) {
    d.roots_.push_back(v);
    d.coeffs_.push_back(c);
    d.sqlen_.push_back(dot(v, v));
  }
  d.long_sqlen_ = *std::max_element(d.sqlen_.begin(), d.sqlen_.end());

  const std::size_t n = d.roots_.size();
  d.negation_.resize(n);
  for (std::size_t k = 0; k < n; ++k) d.negation_[k] = d.root_index(-d.roots_[k]);
  d.reflection_table_.assign(r, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Rational p = coroot_pairing_exact(d.roots_[k], d.simple_[i]);
      d.reflection_table_[i][k] = d.root_index(d.roots_[k] - d.simple_[i] * p);
    }

  std::vector<std::vector<Rational>> gram(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(d.simple_[i], d.simple_[j]);
  d.gram_inverse_ = invert(gram);
  return d;
}

const WeightVector& RootDatum::simple_root(int node) const {
  if (node < 1 || node > rank()) throw InvalidInput("node index out of range");
  return simple_[static_cast<std::size_t>(node - 1)];
}

std::optional<std::size_t> RootDatum::find_root(const WeightVector& v) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v);
  if (it == roots_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

std::size_t RootDatum::root_index(const WeightVector& v) const {
  auto idx = find_root(v);
  if (!idx) throw InvalidInput(v.to_string() + " is not a root of " + name());
  return *idx;
}

int RootDatum::height(std::size_t idx) const {
  int h = 0;
  for (int c : coeffs_[idx]) h += c;
  return h;
}

std::size_t RootDatum::reflect_root(int node, std::size_t idx) const {
  if (node < 1 || node > rank()) throw InvalidInput("reflection index out of range");
  return reflection_table_[static_cast<std::size_t>(node - 1)][idx];
}

std::vector<Rational> RootDatum::simple_coordinates(const WeightVector& v) const {
  if (v.dim() != ambient_dim_) throw InvalidInput("vector of wrong dimension");
  const auto r = static_cast<std::size_t>(rank());
  std::vector<Rational> rhs(r);
  for (std::size_t k = 0; k < r; ++k) rhs[k] = dot(v, simple_[k]);
  std::vector<Rational> c(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) c[i] += gram_inverse_[i][k] * rhs[k];
  auto back = WeightVector::zero(ambient_dim_);
  for (std::size_t i = 0; i < r; ++i) back += simple_[i] * c[i];
  if (back != v) throw InvalidInput(v.to_string() + " is not in the span of the roots");
  return c;
}

std::size_t highest_root_index(const RootDatum& datum) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < datum.root_total(); ++k)
    if (datum.height(k) > datum.height(best)) best = k;
  return best;
}

WeightVector highest_root(const RootDatum& datum) { return datum.root(highest_root_index(datum)); }

std::vector<std::size_t> long_root_indices(const RootDatum& datum) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < datum.root_total(); ++k)
    if (datum.is_long(k)) out.push_back(k);
  return out;
}

std::vector<WeightVector> long_roots(const RootDatum& datum) {
  std::vector<WeightVector> out;
  for (auto k : long_root_indices(datum)) out.push_back(datum.root(k));
  return out;
}

namespace {

// Classifies one connected Dynkin diagram given by its Cartan matrix.
DynkinType classify_component(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return {'A', 1};
  std::vector<std::vector<std::size_t>> adj(n);
  int edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a[i][j] != 0) {
        adj[i].push_back(j);
        if (i < j) ++edges;
      }
  if (edges != static_cast<int>(n) - 1) throw StructuralError("Dynkin diagram is not a tree");

  std::size_t branch = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) throw StructuralError("Dynkin node of degree > 3");
    if (adj[i].size() == 3) {
      if (branch != n) throw StructuralError("Dynkin diagram with two branch nodes");
      branch = i;
    }
  }

  // Multiple bonds: a_ij * a_ji in {2, 3}; node i is long when a_ij < -1.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int bond = a[i][j] * a[j][i];
      if (bond <= 1) continue;
      if (branch != n) throw StructuralError("branched diagram with a multiple bond");
      if (bond == 3) {
        if (n != 2) throw StructuralError("triple bond in a diagram of rank > 2");
        return {'G', 2};
      }
      if (n == 2) return {'B', 2};
      const std::size_t long_node = a[i][j] < -1 ? i : j;
      const std::size_t short_node = long_node == i ? j : i;
      const bool long_end = adj[long_node].size() == 1;
      const bool short_end = adj[short_node].size() == 1;
      if (!long_end && !short_end) {
        if (n == 4) return {'F', 4};
        throw StructuralError("interior double bond outside F4");
      }
      if (short_end) return {'B', static_cast<int>(n)};
      return {'C', static_cast<int>(n)};
    }

  if (branch == n) return {'A', static_cast<int>(n)};
  std::vector<int> legs;
  for (std::size_t start : adj[branch]) {
    int len = 1;
    std::size_t prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return {'D', static_cast<int>(n)};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return {'E', static_cast<int>(n)};
  throw StructuralError("diagram is not of finite type");
}

}  // namespace

std::vector<DynkinType> identify_type(const RootDatum& datum, std::span<const WeightVector> root_set) {
  std::set<WeightVector> subset(root_set.begin(), root_set.end());
  for (const auto& v : subset) {
    if (!datum.is_root(v)) throw StructuralError(v.to_string() + " is not a root");
    if (!subset.count(-v)) throw StructuralError("root set is not closed under negation");
  }
  for (const auto& u : subset)
    for (const auto& v : subset) {
      WeightVector s = u + v;
      if (datum.is_root(s) && !subset.count(s)) throw StructuralError("root set is not closed under addition");
    }
  if (subset.empty()) return {};

  // Generic functional from a fixed seed: nonzero on every root of the subset.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long> dist(1, 1000003);
  std::vector<Rational> f(datum.ambient_dim());
  for (;;) {
    for (auto& x : f) x = Rational(dist(rng), dist(rng));
    bool generic = true;
    for (const auto& v : subset) {
      Rational s = 0;
      for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * v[i];
      if (sgn(s) == 0) {
        generic = false;
        break;
      }
    }
    if (generic) break;
  }
  auto value = [&](const WeightVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * v[i];
    return s;
  };

  std::vector<WeightVector> positive;
  for (const auto& v : subset)
    if (sgn(value(v)) > 0) positive.push_back(v);
  std::set<WeightVector> positive_set(positive.begin(), positive.end());
  std::vector<WeightVector> simple;
  for (const auto& v : positive) {
    bool decomposable = false;
    for (const auto& u : positive)
      if (u != v && positive_set.count(v - u)) {
        decomposable = true;
        break;
      }
    if (!decomposable) simple.push_back(v);
  }

  const std::size_t n = simple.size();
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational p = coroot_pairing_exact(simple[i], simple[j]);
      if (p.get_den() != 1) throw StructuralError("non-integral Cartan entry");
      cartan[i][j] = static_cast<int>(p.get_num().get_si());
    }

  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (cartan[i][j] != 0 && comp[j] < 0) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }

  std::vector<DynkinType> factors;
  std::size_t expected_roots = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    std::vector<std::vector<int>> sub(nodes.size(), std::vector<int>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) sub[i][j] = cartan[nodes[i]][nodes[j]];
    auto t = classify_component(sub);
    expected_roots += root_count(t);
    factors.push_back(t);
  }
  if (expected_roots != subset.size())
    throw StructuralError("root count does not match the identified Dynkin type");
  return normalize_factors(std::move(factors));
}

}  // namespace adjc
