#include "adjc/verify.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

#include "adjc/bbinv.hpp"
#include "adjc/errors.hpp"
#include "adjc/polytope.hpp"
#include "adjc/table.hpp"

#ifndef ADJC_VERSION_STRING
#define ADJC_VERSION_STRING "0.0.0"
#endif

namespace adjc {

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "skip";
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roots",   "polytope",    "fixedpoints", "compass",  "hexagon",
                                              "grading", "freudenthal", "bb",          "character"};
  return names;
}

const std::vector<std::string>& default_groups() {
  static const std::vector<std::string> groups{"B3", "B4", "B5", "B6", "B7", "B8", "D4", "D5", "D6",
                                               "D7", "D8", "E6", "E7", "E8", "F4", "G2"};
  return groups;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& suites) {
  const auto& known = suite_names();
  std::set<std::string> chosen;
  for (const auto& s : suites) {
    if (s == "all") {
      chosen.insert(known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), s) != known.end()) {
      chosen.insert(s);
    } else {
      throw InvalidInput("unknown suite '" + s + "'");
    }
  }
  if (suites.empty()) chosen.insert(known.begin(), known.end());
  std::vector<std::string> out;
  for (const auto& s : known)
    if (chosen.count(s)) out.push_back(s);
  return out;
}

DynkinType parse_group(const std::string& name, int max_rank) {
  DynkinType t = parse_dynkin_type(name);
  bool ok = false;
  switch (t.letter) {
    case 'A': ok = t.rank >= 1; break;
    case 'B': ok = t.rank >= 3; break;
    case 'C': ok = t.rank >= 3; break;
    case 'D': ok = t.rank >= 4; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: break;
  }
  if (!ok) throw InvalidInput("unsupported group '" + name + "'");
  if (std::string("ABCD").find(t.letter) != std::string::npos && t.rank > max_rank) {
    throw InvalidInput("group '" + name + "' exceeds the rank cap " + std::to_string(max_rank) + " (raise it with --rank)");
  }
  return t;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool contact_family(const RootDatum& d) { return d.type_letter() != 'A' && d.type_letter() != 'C'; }

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::size_t expected_long_count(DynkinType t) {
  const auto r = static_cast<std::size_t>(t.rank);
  switch (t.letter) {
    case 'A': return r * (r + 1);
    case 'B': return 2 * r * (r - 1);
    case 'C': return 2 * r;
    case 'D': return 2 * r * (r - 1);
    case 'E': return r == 6 ? 72 : r == 7 ? 126 : 240;
    case 'F': return 24;
    default: return 6;
  }
}

int expected_lie_dimension(DynkinType t) {
  const int r = t.rank;
  switch (t.letter) {
    case 'A': return r * (r + 2);
    case 'B':
    case 'C': return r * (2 * r + 1);
    case 'D': return r * (2 * r - 1);
    case 'E': return r == 6 ? 78 : r == 7 ? 133 : 248;
    case 'F': return 52;
    default: return 14;
  }
}

int expected_adjoint_dimension(DynkinType t) {
  const int r = t.rank;
  switch (t.letter) {
    case 'A':
    case 'C': return 2 * r - 1;
    case 'B': return 4 * r - 5;
    case 'D': return 4 * r - 7;
    case 'E': return r == 6 ? 21 : r == 7 ? 33 : 57;
    case 'F': return 15;
    default: return 5;
  }
}

std::string expected_length_ratio(DynkinType t) {
  switch (t.letter) {
    case 'B':
    case 'C':
    case 'F': return "2";
    case 'G': return "3";
    default: return "1";
  }
}

struct Sink {
  const RootDatum& d;
  std::vector<CheckResult>& out;

  void check(const std::string& id, const std::string& expected, const std::string& actual,
             const std::string& anchor) {
    out.push_back({id, d.name(), expected, actual, expected == actual ? CheckStatus::Pass : CheckStatus::Fail, anchor});
  }
  void skip(const std::string& id, const std::string& reason, const std::string& anchor) {
    out.push_back({id, d.name(), reason, reason, CheckStatus::Skip, anchor});
  }
};

void suite_roots(const RootDatum& d, Sink& s) {
  const DynkinType t = d.type();
  s.check("roots.count", std::to_string(root_count(t)), std::to_string(d.root_total()), "root count of the type");
  s.check("roots.lie_dimension", std::to_string(expected_lie_dimension(t)),
          std::to_string(d.root_total() + static_cast<std::size_t>(d.rank())), "dim g = |roots| + rank");
  s.check("roots.long_count", std::to_string(expected_long_count(t)), std::to_string(long_roots(d).size()),
          "long roots");

  std::set<WeightVector> all(d.roots().begin(), d.roots().end());
  bool closed = true;
  for (const auto& r : d.roots()) {
    if (!all.count(-r)) closed = false;
    for (int i = 1; i <= d.rank(); ++i)
      if (!all.count(reflect(d, i, r))) closed = false;
  }
  s.check("roots.closure", "closed", closed ? "closed" : "not closed", "closure under simple reflections");

  bool cartan_ok = true;
  const auto& c = d.cartan_matrix();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j && c[i][j] != 2) cartan_ok = false;
      if (i != j && (c[i][j] > 0 || c[i][j] < -3)) cartan_ok = false;
    }
  s.check("roots.cartan", "valid", cartan_ok ? "valid" : "invalid", "Cartan matrix entries");

  std::size_t coherent = 0;
  for (std::size_t k = 0; k < d.root_total(); ++k) {
    const auto& co = d.coefficients(k);
    bool pos = std::all_of(co.begin(), co.end(), [](int x) { return x >= 0; });
    bool neg = std::all_of(co.begin(), co.end(), [](int x) { return x <= 0; });
    coherent += (pos || neg) ? 1 : 0;
  }
  s.check("roots.sign_coherent", std::to_string(d.root_total()), std::to_string(coherent),
          "roots are integral combinations of one sign");

  const auto h = highest_root_index(d);
  int unique_max = 0;
  for (std::size_t k = 0; k < d.root_total(); ++k) unique_max += d.height(k) == d.height(h) ? 1 : 0;
  s.check("roots.highest_root", "unique, long", std::string(unique_max == 1 ? "unique" : "not unique") + ", " +
                                                     (d.is_long(h) ? "long" : "short"),
          "highest root is long");

  Rational shortest = d.long_squared_length();
  for (std::size_t k = 0; k < d.root_total(); ++k)
    if (d.squared_length(k) < shortest) shortest = d.squared_length(k);
  s.check("roots.length_ratio", expected_length_ratio(t), Rational(d.long_squared_length() / shortest).get_str(),
          "ratio of squared root lengths");

  s.check("roots.identify", d.name(), factors_name(identify_type(d, d.roots())), "type of the full root system");
}

void suite_polytope(const RootDatum& d, Sink& s) {
  const auto poly = root_polytope(d);
  auto lr = long_roots(d);
  std::sort(lr.begin(), lr.end());
  s.check("polytope.vertices", "long roots (" + std::to_string(lr.size()) + ")",
          (poly.vertices == lr ? "long roots (" : "other (") + std::to_string(poly.vertices.size()) + ")",
          "vertices of the root polytope are the long roots");
  bool sym = std::all_of(poly.vertices.begin(), poly.vertices.end(), [&](const WeightVector& v) {
    return std::binary_search(poly.vertices.begin(), poly.vertices.end(), -v);
  });
  s.check("polytope.symmetric", "symmetric", sym ? "symmetric" : "not symmetric", "central symmetry");
}

void suite_fixedpoints(const RootDatum& d, Sink& s) {
  const auto x = make_adjoint_variety(d);
  const WeightVector beta = highest_root(d);
  s.check("fixedpoints.count", std::to_string(expected_long_count(d.type())), std::to_string(x.points.size()),
          "fixed points correspond to long roots");

  std::size_t good = 0;
  for (const auto& p : x.points) good += apply_word(d, p.witness, beta) == p.weight && d.is_long(p.root_index) ? 1 : 0;
  s.check("fixedpoints.witnesses", std::to_string(x.points.size()), std::to_string(good),
          "weight of wP is w(beta)");

  std::vector<int> expected_nodes;
  if (contact_family(d)) {
    const auto& rec = FreudenthalTable::builtin().record(d.type(), "X_G");
    expected_nodes = rec.components.at(0).at(0).nodes;
  } else if (d.type_letter() == 'A') {
    expected_nodes = d.rank() == 1 ? std::vector<int>{1} : std::vector<int>{1, d.rank()};
  } else {
    expected_nodes = {1};
  }
  s.check("fixedpoints.parabolic", join(expected_nodes), join(x.parabolic.marked_nodes),
          "adjoint variety marked nodes");
  s.check("fixedpoints.dimension", std::to_string(expected_adjoint_dimension(d.type())), std::to_string(x.dimension),
          "dimension of the adjoint variety");

  std::vector<WeightVector> weights;
  for (const auto& p : x.points) weights.push_back(p.weight);
  const auto fp_poly = make_polytope(weights);
  const auto root_poly = root_polytope(d);
  s.check("fixedpoints.polytope", "equal to root polytope",
          fp_poly.vertices == root_poly.vertices ? "equal to root polytope" : "different",
          "polytope of fixed points is the root polytope");
}

void suite_compass(const RootDatum& d, Sink& s) {
  const auto x = make_adjoint_variety(d);
  const WeightVector beta = highest_root(d);
  std::size_t sized = 0;
  for (const auto& c : x.compasses) sized += c.total() == x.dimension ? 1 : 0;
  s.check("compass.size", std::to_string(x.points.size()), std::to_string(sized), "compass size is dim X");

  const Compass base = compass_at(d, x.parabolic, ReflectionWord{});
  s.check("compass.base_point", "1", std::to_string(base.multiplicity(-beta)), "base compass contains -beta once");

  std::size_t equivariant = 0;
  for (std::size_t p = 0; p < x.points.size(); ++p) {
    Compass moved;
    for (const auto& [e, m] : base.entries()) moved.add(apply_word(d, x.points[p].witness, e), m);
    equivariant += moved == x.compasses[p] ? 1 : 0;
  }
  s.check("compass.equivariance", std::to_string(x.points.size()), std::to_string(equivariant),
          "compass at wP is w of the base compass");

  std::size_t directed = 0, entries = 0;
  for (std::size_t p = 0; p < x.points.size(); ++p) {
    for (const auto& [nu, m] : x.compasses[p].entries()) {
      ++entries;
      std::size_t lead = 0;
      while (sgn(nu[lead]) == 0) ++lead;
      for (const auto& q : x.points) {
        WeightVector diff = q.weight - x.points[p].weight;
        Rational lambda = diff[lead] / nu[lead];
        if (sgn(lambda) > 0 && diff == nu * lambda) {
          ++directed;
          break;
        }
      }
    }
  }
  s.check("compass.direction", std::to_string(entries), std::to_string(directed),
          "compass entries point to other fixed points");

  if (!contact_family(d)) {
    s.skip("compass.contact", "not a contact family", "contact weight symmetry");
    return;
  }
  const auto report = contact_compass_checks(d, x);
  std::string actual = std::to_string(report.violations.size()) + " violations";
  if (!report.violations.empty()) actual += ": " + report.violations[0].point.to_string() + " " + report.violations[0].what;
  s.check("compass.contact", "0 violations", actual, "contact weight symmetry and -gamma multiplicity one");
}

void suite_hexagon(const RootDatum& d, Sink& s) {
  const auto hex = s2_projection(d);
  const auto& f = hex.frame;
  std::vector<std::string> counts;
  for (int i = 0; i < 6; ++i) {
    int c = 0;
    for (const auto& r : d.roots()) c += hex.projection.apply(r) == f.a(i) ? 1 : 0;
    counts.push_back(std::to_string(c));
  }
  s.check("hexagon.vertex_fibres", "1,1,1,1,1,1", join(counts), "one root over every hexagon vertex");

  std::vector<WeightVector> images;
  bool integral = true, interior = false;
  for (const auto& r : d.roots()) {
    auto im = hex.projection.apply(r);
    integral = integral && im.is_integral();
    bool vertex = false;
    for (int i = 0; i < 6; ++i) vertex = vertex || im == f.a(i);
    interior = interior || (!vertex && !im.is_zero());
    images.push_back(std::move(im));
  }
  std::vector<WeightVector> frame_vertices(f.alpha.begin(), f.alpha.end());
  std::sort(frame_vertices.begin(), frame_vertices.end());
  const auto poly = make_polytope(images);
  s.check("hexagon.projected_vertices", "6 hexagon vertices",
          std::to_string(poly.vertices.size()) + (poly.vertices == frame_vertices ? " hexagon vertices" : " other vertices"),
          "projected root polytope is the hexagon");
  s.check("hexagon.lattice", "integral", integral ? "integral" : "not integral",
          "M(H2) is generated by alpha_0 and beta_0");
  s.check("hexagon.interior_point", "present", interior ? "present" : "absent",
          "some root maps to a nonzero interior point");

  const auto report = verify_hexagon_compasses(d);
  for (const auto& c : report.checks) {
    s.check("hexagon.compass." + c.component, c.expected.to_string(), c.actual.to_string(),
            c.component.rfind("y_", 0) == 0 ? "compass at a hexagon vertex"
            : c.component.rfind("Y_0", 0) == 0 ? "compass of a component over 0"
                                               : "compass of a component over beta_i");
  }
  s.check("hexagon.components", "", join(report.problems, "; "), "components sit over hexagon lattice points");

  const int n = report.n;
  Y0Row expected_row{};
  switch (d.type_letter()) {
    case 'B':
    case 'D': expected_row = {2, 2 * n + 1, 2 * n - 11, 12}; break;
    case 'E':
      expected_row = d.rank() == 6 ? Y0Row{3, 21, 3, 18} : d.rank() == 7 ? Y0Row{4, 33, 9, 24} : Y0Row{6, 57, 21, 36};
      break;
    default: break;
  }
  const auto expected_count = expected_dimensions(FreudenthalTable::builtin().record(d.type(), "Y_0").components,
                                                  d.rank()).size();
  auto row_text = [](const Y0Row& r) {
    return "(" + std::to_string(r.multiplicity) + "," + std::to_string(r.dim_x) + "," + std::to_string(r.dim_y) + "," +
           std::to_string(r.codim) + ")";
  };
  std::vector<std::string> exp_rows(expected_count, row_text(expected_row)), act_rows;
  for (const auto& r : report.y0_rows) act_rows.push_back(row_text(r));
  s.check("hexagon.y0_rows", join(exp_rows, " "), join(act_rows, " "), "(mult, dim X, dim Y_0, codim) rows");
}

void suite_grading(const RootDatum& d, Sink& s) {
  const auto hex = s2_projection(d);
  const DynkinType t = d.type();
  const std::string dim_g = std::to_string(expected_lie_dimension(t));
  const auto line0 = line_projection(d, hex, 0);

  for (const auto& [label, proj] : {std::pair<std::string, const Projection*>{"rank2", &hex.projection},
                                    std::pair<std::string, const Projection*>{"rank1", &line0}}) {
    const auto g = grade_algebra(d, *proj);
    s.check("grading.total." + label, dim_g, std::to_string(total_dimension(g)), "graded pieces add up to dim g");
    bool sym = true;
    for (const auto& [m, piece] : g) {
      auto it = g.find(-m);
      sym = sym && it != g.end() && it->second.dimension == piece.dimension;
    }
    s.check("grading.symmetry." + label, "symmetric", sym ? "symmetric" : "asymmetric", "dim g_m = dim g_-m");
  }

  const auto exp2 = expected_zero_part(t, 2);
  std::size_t exp_roots = 0;
  for (const auto& f : exp2) exp_roots += root_count(f);
  const auto g2 = grade_algebra(d, hex.projection);
  s.check("grading.zero_dim", std::to_string(exp_roots + static_cast<std::size_t>(d.rank())),
          std::to_string(g2.at(WeightVector::zero(2, Lattice::Rank2)).dimension), "dimension of g_0 under S2");
  s.check("grading.zero_type.rank2", factors_name(exp2), factors_name(zero_part_type(d, hex.projection)),
          "g0 semisimple part, rank two");

  std::vector<std::string> rank1_types;
  for (int k = 0; k < 6; ++k) rank1_types.push_back(factors_name(zero_part_type(d, line_projection(d, hex, k))));
  std::sort(rank1_types.begin(), rank1_types.end());
  rank1_types.erase(std::unique(rank1_types.begin(), rank1_types.end()), rank1_types.end());
  s.check("grading.zero_type.rank1", factors_name(expected_zero_part(t, 1)), join(rank1_types, " | "),
          "g0 semisimple part, rank one");

  const auto pis = s1_projections(hex.frame);
  const auto& f = hex.frame;
  std::vector<std::string> values;
  bool in_range = true;
  for (int k = 0; k < 6; ++k) {
    const auto& pi = pis[static_cast<std::size_t>(k)];
    auto v = [&](const WeightVector& w) { return pi.apply(w)[0].get_str(); };
    values.push_back(v(f.a(k - 1)) + "," + v(f.a(k + 2)) + "," + v(f.b(k)) + "," + v(f.a(k)) + "," + v(f.b(k - 1)));
    for (int i = 0; i < 6; ++i)
      for (const auto* w : {&f.a(i), &f.b(i)}) {
        Rational x = pi.apply(*w)[0];
        in_range = in_range && x >= -2 && x <= 2 && x.get_den() == 1;
      }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  s.check("grading.s1_values", "2,-2,0,1,1", join(values, " | "), "pi_k on alpha_{k-1}, alpha_{k+2}, beta_k, alpha_k, beta_{k-1}");
  s.check("grading.s1_range", "[-2,2]", in_range ? "[-2,2]" : "outside", "rank-one image of the hexagon");
}

void suite_freudenthal(const RootDatum& d, Sink& s) {
  const auto report = verify_freudenthal_table(d);
  for (const auto& c : report.cells) {
    std::string actual = "[" + join(c.actual_dims) + "]";
    if (!c.failing_indices.empty()) actual += " (disagrees at k=" + join(c.failing_indices) + ")";
    s.check("freudenthal." + c.cell, "[" + join(c.expected_dims) + "]", actual,
            "inner fixed components table: " + c.cell + " = " + c.expected_variety);
  }
}

std::string map_text(const std::map<long, int>& m) {
  std::vector<std::string> parts;
  for (const auto& [w, k] : m) parts.push_back(std::to_string(w) + "^" + std::to_string(k));
  return "{" + join(parts, ", ") + "}";
}

void suite_bb(const RootDatum& d, Sink& s, std::uint64_t seed) {
  const auto x = make_adjoint_variety(d);
  const auto covectors = generic_covectors(d, seed, 3);
  std::vector<std::vector<int>> bettis;
  bool nu_ok = true;
  for (const auto& c : covectors) {
    auto action = downgrade_to_line(d, x, c);
    for (std::size_t p = 0; p < x.points.size(); ++p) nu_ok = nu_ok && action.nu_plus[p] + action.nu_minus[p] == x.dimension;
    bettis.push_back(betti_numbers(action));
  }
  std::vector<std::string> rendered;
  for (const auto& b : bettis) rendered.push_back(join(b));
  s.check("bb.betti_agree", join(std::vector<std::string>(3, rendered[0]), " | "), join(rendered, " | "),
          "Betti numbers do not depend on the covector");
  const auto& b = bettis[0];
  s.check("bb.b0_b2", "1,1", std::to_string(b.at(0)) + "," + std::to_string(b.size() > 1 ? b[1] : 0),
          "b0 = 1 and b2 equals the weight-1 component count");
  std::vector<int> rev(b.rbegin(), b.rend());
  s.check("bb.poincare", "symmetric", rev == b ? "symmetric" : "asymmetric", "Poincare duality");
  int chi = 0;
  for (int v : b) chi += v;
  s.check("bb.euler", std::to_string(expected_long_count(d.type())), std::to_string(chi), "sum of Betti numbers");
  s.check("bb.nu_sum", "dim X everywhere", nu_ok ? "dim X everywhere" : "mismatch", "nu+ + nu- = dim X");

  const auto hex = s2_projection(d);
  const auto line = covector_of(d, line_projection(d, hex, 0));
  const auto w = fixed_point_weights(d, x, line);
  auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  s.check("bb.line_weights", "bandwidth 4 in [-2,2]",
          "bandwidth " + std::to_string(bandwidth(w)) + " in [" + std::to_string(*lo) + "," + std::to_string(*hi) + "]",
          "rank-one downgrade of the hexagon");
  std::string refused = "accepted";
  try {
    downgrade_to_line(d, x, line);
  } catch (const NonGenericCovector&) {
    refused = "refused";
  }
  s.check("bb.nongeneric", "refused", refused, "non-generic covectors are refused");

  const auto report = bandwidth_and_equalization(d);
  const int n = report.n;
  std::set<std::string> z1, residual, z0_exp, z0_act;
  for (const auto& l : report.lines) {
    z1.insert("count " + std::to_string(l.z1_count) + ", dim " + std::to_string(l.z1.dimension) + ", bandwidth " +
              std::to_string(l.z1.bandwidth) + ", extremes " + join(l.z1.source_dims) + "/" + join(l.z1.sink_dims) +
              (l.z1.equalized ? ", equalized" : ", not equalized"));
    residual.insert(map_text(l.z1_residual));
    for (const auto& z : l.z0) {
      const int h = (z.dimension - 1) / 2;
      z0_exp.insert("dim " + std::to_string(z.dimension) + ": bandwidth 2 on [-1,1], extremes " + std::to_string(h) +
                    "/" + std::to_string(h) + ", equalized");
      z0_act.insert("dim " + std::to_string(z.dimension) + ": bandwidth " + std::to_string(z.bandwidth) + " on [" +
                    z.min_weight.get_str() + "," + z.max_weight.get_str() + "], extremes " + join(z.source_dims) + "/" +
                    join(z.sink_dims) + (z.equalized ? ", equalized" : ", not equalized"));
    }
  }
  auto set_text = [](const std::set<std::string>& v) { return join(std::vector<std::string>(v.begin(), v.end()), " | "); };
  s.check("bb.bandwidth.z1",
          "count 1, dim " + std::to_string(n - 1) + ", bandwidth 3, extremes 0/0, equalized", set_text(z1),
          "Z_1 has bandwidth three");
  s.check("bb.bandwidth.residual", map_text({{-2, 1}, {-1, n}, {1, 1}}), set_text(residual),
          "residual compass at the extremes of Z_1");
  s.check("bb.bandwidth.z0", set_text(z0_exp), set_text(z0_act), "Z_0 components have bandwidth two");
}

void suite_character(const RootDatum& d, Sink& s, std::uint64_t seed) {
  const auto x = make_adjoint_variety(d);
  const auto points = evaluation_points(d, seed, 3);
  for (std::size_t j = 0; j < points.size(); ++j) {
    std::vector<std::string> coords;
    for (const auto& c : points[j]) coords.push_back(c.get_str());
    const std::string at = "t=(" + join(coords) + ") ";
    s.check("character.point_" + std::to_string(j), at + adjoint_character(d, points[j]).get_str(),
            at + localized_character(d, x, points[j]).get_str(), "localization reproduces the adjoint character");
  }
}

}  // namespace

std::vector<CheckResult> run_group_suite(const RootDatum& datum, const std::string& suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  Sink s{datum, out};
  const std::uint64_t gseed = seed ^ fnv1a(datum.name());
  const bool in_family = contact_family(datum);
  const bool needs_family = suite == "hexagon" || suite == "grading" || suite == "freudenthal" || suite == "bb";
  if (needs_family && !in_family) {
    s.skip(suite + ".applicable", "not covered for type " + std::string(1, datum.type_letter()),
           "types A and C are outside the contact families");
    return out;
  }
  if (suite == "roots") suite_roots(datum, s);
  else if (suite == "polytope") suite_polytope(datum, s);
  else if (suite == "fixedpoints") suite_fixedpoints(datum, s);
  else if (suite == "compass") suite_compass(datum, s);
  else if (suite == "hexagon") suite_hexagon(datum, s);
  else if (suite == "grading") suite_grading(datum, s);
  else if (suite == "freudenthal") suite_freudenthal(datum, s);
  else if (suite == "bb") suite_bb(datum, s, gseed);
  else if (suite == "character") suite_character(datum, s, gseed + 1);
  else throw InvalidInput("unknown suite '" + suite + "'");
  return out;
}

Report run_verification(const RunOptions& options) {
  Report report;
  report.seed = options.seed;
  report.max_rank = options.max_rank;
  report.suites = expand_suites(options.suites);
  const auto& names = options.groups.empty() ? default_groups() : options.groups;
  std::vector<DynkinType> types;
  for (const auto& g : names) {
    auto t = parse_group(g, options.max_rank);
    if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
  }
  for (const auto& t : types) {
    report.groups.push_back(t.name());
    const auto datum = build_root_system(t.letter, t.rank);
    for (const auto& suite : report.suites) {
      try {
        auto part = run_group_suite(datum, suite, options.seed);
        report.results.insert(report.results.end(), part.begin(), part.end());
      } catch (const Error& e) {
        report.results.push_back({suite + ".error", datum.name(), "no error", e.what(), CheckStatus::Fail, "internal"});
      }
    }
  }
  std::sort(report.results.begin(), report.results.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.check_id, a.group) < std::tie(b.check_id, b.group);
  });
  return report;
}

std::string render_json(const Report& report) {
  nlohmann::json meta{{"tool", "adjc"},
                      {"version", ADJC_VERSION_STRING},
                      {"seed", report.seed},
                      {"max_rank", report.max_rank},
                      {"groups", report.groups},
                      {"suites", report.suites},
                      {"total", report.results.size()},
                      {"failures", report.failures()}};
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) {
    results.push_back({{"check_id", r.check_id},
                       {"group", r.group},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"status", status_name(r.status)},
                       {"paper_anchor", r.paper_anchor}});
  }
  return nlohmann::json{{"meta", meta}, {"results", results}}.dump(2) + "\n";
}

namespace {

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_markdown(const Report& report) {
  std::ostringstream os;
  os << "# adjc verification report\n\n";
  os << "- version: " << ADJC_VERSION_STRING << "\n";
  os << "- seed: " << report.seed << "\n";
  os << "- groups: " << join(report.groups, ", ") << "\n";
  os << "- suites: " << join(report.suites, ", ") << "\n";
  os << "- checks: " << report.results.size() << ", failures: " << report.failures() << "\n\n";
  os << "| check_id | group | status | expected | actual | paper_anchor |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& r : report.results) {
    os << "| " << md_cell(r.check_id) << " | " << r.group << " | " << status_name(r.status) << " | "
       << md_cell(r.expected) << " | " << md_cell(r.actual) << " | " << md_cell(r.paper_anchor) << " |\n";
  }
  return os.str();
}

}  // namespace adjc
