#include "adjc/bbinv.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "adjc/errors.hpp"

namespace adjc {

long pair_root(const RootDatum& datum, const Covector& covector, std::size_t root_idx) {
  const auto& c = datum.coefficients(root_idx);
  if (covector.values.size() != c.size()) throw InvalidInput("covector length does not match the rank");
  long s = 0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * covector.values[k];
  return s;
}

long pair_root(const RootDatum& datum, const Covector& covector, const WeightVector& root) {
  return pair_root(datum, covector, datum.root_index(root));
}

bool is_generic(const RootDatum& datum, const Covector& covector) {
  for (std::size_t r = 0; r < datum.root_total(); ++r)
    if (pair_root(datum, covector, r) == 0) return false;
  return true;
}

Covector covector_of(const RootDatum& datum, const Projection& line) {
  if (line.target_dim() != 1) throw InvalidInput("covector needs a rank-one projection");
  Covector c;
  for (const auto& a : datum.simple_roots()) {
    Rational v = line.apply(a)[0];
    if (v.get_den() != 1) throw InvalidInput("projection is not integral on " + a.to_string());
    c.values.push_back(v.get_num().get_si());
  }
  return c;
}

std::vector<Covector> generic_covectors(const RootDatum& datum, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 8);
  std::vector<Covector> out;
  while (out.size() < count) {
    Covector c;
    for (int k = 0; k < datum.rank(); ++k) {
      long v = dist(rng);
      c.values.push_back(v >= 0 ? v + 1 : v);
    }
    if (is_generic(datum, c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<long> fixed_point_weights(const RootDatum& datum, const AdjointVariety& variety, const Covector& covector) {
  std::vector<long> w;
  for (const auto& p : variety.points) w.push_back(pair_root(datum, covector, p.root_index));
  return w;
}

long bandwidth(const std::vector<long>& weights) {
  if (weights.empty()) return 0;
  auto [lo, hi] = std::minmax_element(weights.begin(), weights.end());
  return *hi - *lo;
}

OneParamAction downgrade_to_line(const RootDatum& datum, const AdjointVariety& variety, const Covector& covector) {
  if (!is_generic(datum, covector)) throw NonGenericCovector("covector vanishes on a root of " + datum.name());
  OneParamAction action;
  action.dimension = variety.dimension;
  action.weights = fixed_point_weights(datum, variety, covector);
  for (const auto& compass : variety.compasses) {
    std::map<long, int> projected;
    int plus = 0, minus = 0;
    for (const auto& [entry, mult] : compass.entries()) {
      long v = pair_root(datum, covector, entry);
      projected[v] += mult;
      (v > 0 ? plus : minus) += mult;
    }
    action.compasses.push_back(std::move(projected));
    action.nu_plus.push_back(plus);
    action.nu_minus.push_back(minus);
  }
  return action;
}

std::vector<int> betti_numbers(const OneParamAction& action) {
  std::vector<int> b(static_cast<std::size_t>(action.dimension) + 1, 0);
  for (int k : action.nu_plus) {
    if (k < 0 || k > action.dimension) throw ConsistencyError("index outside [0, dim]");
    ++b[static_cast<std::size_t>(k)];
  }
  return b;
}

namespace {

// t^alpha for every root of the datum, through a table of powers per
// simple-root coordinate.
std::vector<Rational> root_monomials(const RootDatum& datum, const TorusPoint& t) {
  if (t.size() != static_cast<std::size_t>(datum.rank())) throw InvalidInput("torus point has the wrong length");
  int top = 0;
  for (std::size_t r = 0; r < datum.root_total(); ++r)
    for (int c : datum.coefficients(r)) top = std::max(top, std::abs(c));
  std::vector<std::vector<Rational>> powers(t.size(), std::vector<Rational>(2 * static_cast<std::size_t>(top) + 1));
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (sgn(t[k]) == 0) throw InvalidInput("torus coordinates must be nonzero");
    auto& row = powers[k];
    row[static_cast<std::size_t>(top)] = 1;
    for (int e = 1; e <= top; ++e) {
      row[static_cast<std::size_t>(top + e)] = row[static_cast<std::size_t>(top + e - 1)] * t[k];
      row[static_cast<std::size_t>(top - e)] = row[static_cast<std::size_t>(top - e + 1)] / t[k];
    }
  }
  std::vector<Rational> mono(datum.root_total());
  for (std::size_t r = 0; r < datum.root_total(); ++r) {
    Rational m = 1;
    const auto& c = datum.coefficients(r);
    for (std::size_t k = 0; k < c.size(); ++k) m *= powers[k][static_cast<std::size_t>(top + c[k])];
    mono[r] = m;
  }
  return mono;
}

}  // namespace

Rational localized_character(const RootDatum& datum, const AdjointVariety& variety, const TorusPoint& t) {
  const auto mono = root_monomials(datum, t);
  Rational total = 0;
  for (std::size_t p = 0; p < variety.points.size(); ++p) {
    Rational denom = 1;
    for (const auto& [entry, mult] : variety.compasses[p].entries()) {
      Rational factor = 1 - mono[datum.root_index(entry)];
      if (sgn(factor) == 0) throw PoleEncountered("pole at compass entry " + entry.to_string());
      for (int m = 0; m < mult; ++m) denom *= factor;
    }
    total += mono[variety.points[p].root_index] / denom;
  }
  return total;
}

Rational adjoint_character(const RootDatum& datum, const TorusPoint& t) {
  Rational total = datum.rank();
  for (const auto& m : root_monomials(datum, t)) total += m;
  return total;
}

std::vector<TorusPoint> evaluation_points(const RootDatum& datum, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(2, 10);
  std::vector<TorusPoint> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100000) throw PoleEncountered("no pole-free evaluation point found");
    TorusPoint t;
    for (int k = 0; k < datum.rank(); ++k) t.emplace_back(dist(rng));
    auto mono = root_monomials(datum, t);
    bool pole = std::any_of(mono.begin(), mono.end(), [](const Rational& m) { return m == 1; });
    if (!pole && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

namespace {

struct ProfileInput {
  const HexagonFrame& frame;
  const Projection& pi;  // Rank2 -> Rank1
  int k;
};

SubtorusProfile profile_component(const ComponentRecord& big, const std::vector<ComponentRecord>& small,
                                  const ProfileInput& in, std::vector<std::string>& problems,
                                  const std::string& label) {
  SubtorusProfile prof;
  prof.dimension = big.dimension;
  const auto& bk = in.frame.b(in.k);
  const Rational bb = in.frame.inner(bk, bk);
  auto rel = [&](const WeightVector& m) -> Rational { return in.frame.inner(m, bk) / bb; };

  std::set<WeightVector> members(big.members.begin(), big.members.end());
  std::vector<const ComponentRecord*> inside;
  std::size_t covered = 0;
  for (const auto& c : small) {
    std::size_t hits = 0;
    for (const auto& y : c.members) hits += members.count(y);
    if (hits == 0) continue;
    if (hits != c.members.size()) problems.push_back(label + ": H2-component straddles two H1-components");
    inside.push_back(&c);
    covered += hits;
  }
  if (covered != members.size() || inside.empty()) {
    problems.push_back(label + ": H2-components do not cover the fixed points");
    return prof;
  }

  prof.min_weight = prof.max_weight = rel(inside.front()->weight);
  for (const auto* c : inside) {
    Rational t = rel(c->weight);
    if (t < prof.min_weight) prof.min_weight = t;
    if (t > prof.max_weight) prof.max_weight = t;
  }
  Rational width = prof.max_weight - prof.min_weight;
  if (width.get_den() != 1) problems.push_back(label + ": non-integral bandwidth");
  prof.bandwidth = static_cast<int>(width.get_num().get_si());

  prof.equalized = true;
  for (const auto* c : inside) {
    Rational t = rel(c->weight);
    if (t != prof.min_weight && t != prof.max_weight) continue;
    (t == prof.max_weight ? prof.source_dims : prof.sink_dims).push_back(c->dimension);
    for (const auto& [entry, mult] : c->compass.entries()) {
      if (!in.pi.apply(entry).is_zero()) continue;
      if (entry != bk && entry != -bk) prof.equalized = false;
    }
  }
  std::sort(prof.source_dims.begin(), prof.source_dims.end());
  std::sort(prof.sink_dims.begin(), prof.sink_dims.end());
  return prof;
}

}  // namespace

BandwidthReport bandwidth_and_equalization(const RootDatum& datum) {
  BandwidthReport report;
  report.group = datum.name();
  report.n = contact_half_dimension(datum);
  const int n = report.n;
  const auto variety = make_adjoint_variety(datum);
  const auto hex = s2_projection(datum);
  const auto pis = s1_projections(hex.frame);
  const auto small = fixed_components(datum, variety, hex.projection);
  const std::map<long, int> residual_expected{{-2, 1}, {-1, n}, {1, 1}};

  for (int k = 0; k < 6; ++k) {
    LineProfile line;
    line.index = k;
    const std::string tag = datum.name() + " pi_" + std::to_string(k);
    const auto big = fixed_components(datum, variety, line_projection(datum, hex, k));
    const ProfileInput in{hex.frame, pis[static_cast<std::size_t>(k)], k};

    auto z1 = components_at(big, WeightVector(std::initializer_list<long>{1}, Lattice::Rank1));
    line.z1_count = static_cast<int>(z1.size());
    if (z1.size() != 1) {
      report.problems.push_back(tag + ": " + std::to_string(z1.size()) + " components at weight 1");
    } else {
      line.z1 = profile_component(z1[0], small, in, report.problems, tag + " Z_1");
      for (const auto& [entry, mult] : z1[0].compass.entries()) line.z1_residual[entry[0].get_num().get_si()] += mult;
      if (line.z1.dimension != n - 1) report.problems.push_back(tag + ": dim Z_1 is not n-1");
      if (line.z1.bandwidth != 3) report.problems.push_back(tag + ": Z_1 bandwidth is not 3");
      if (line.z1.source_dims != std::vector<int>{0} || line.z1.sink_dims != std::vector<int>{0}) {
        report.problems.push_back(tag + ": Z_1 extremes are not isolated points");
      }
      if (!line.z1.equalized) report.problems.push_back(tag + ": Z_1 extremes are not equalized");
      if (line.z1_residual != residual_expected) report.problems.push_back(tag + ": residual compass at Z_1");
    }

    auto z0 = components_at(big, WeightVector(std::initializer_list<long>{0}, Lattice::Rank1));
    for (std::size_t c = 0; c < z0.size(); ++c) {
      const std::string label = tag + " Z_0[" + std::to_string(c) + "]";
      auto prof = profile_component(z0[c], small, in, report.problems, label);
      if (prof.bandwidth != 2) report.problems.push_back(label + ": bandwidth is not 2");
      if (prof.min_weight != -1 || prof.max_weight != 1) report.problems.push_back(label + ": extremes not at -1, 1");
      if (prof.dimension % 2 != 1) {
        report.problems.push_back(label + ": even dimension");
      } else {
        const std::vector<int> half{(prof.dimension - 1) / 2};
        if (prof.source_dims != half || prof.sink_dims != half) {
          report.problems.push_back(label + ": extremal components are not of half dimension");
        }
      }
      if (!prof.equalized) report.problems.push_back(label + ": extremes are not equalized");
      line.z0.push_back(std::move(prof));
    }
    report.lines.push_back(std::move(line));
  }
  return report;
}

}  // namespace adjc
