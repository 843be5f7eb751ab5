// Acceptance gate: one line per criterion over the default groups.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adjc/bbinv.hpp"
#include "adjc/downgrade.hpp"
#include "adjc/polytope.hpp"
#include "adjc/table.hpp"
#include "adjc/torusfix.hpp"
#include "adjc/verify.hpp"
#include "oracles.hpp"

using namespace adjc;

namespace {

constexpr double kFixedPointBudget = 5.0;  // seconds, criterion 1
constexpr double kE8LocalizationBudget = 60.0;  // seconds, criterion 10
constexpr std::size_t kCovectors = 3;
constexpr std::size_t kEvaluationPoints = 3;
constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::vector<RootDatum> groups() {
  std::vector<RootDatum> out;
  for (const auto& g : default_groups()) {
    auto t = parse_group(g, 8);
    out.push_back(build_root_system(t.letter, t.rank));
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// dim X_G = 2n + 1, by type.
int expected_adjoint_dimension(const RootDatum& d) {
  int r = d.rank();
  switch (d.type_letter()) {
    case 'B': return 4 * r - 5;
    case 'D': return 4 * r - 7;
    case 'E': return r == 6 ? 21 : r == 7 ? 33 : 57;
    case 'F': return 15;
    default: return 5;
  }
}

int expected_lie_dimension(const RootDatum& d) {
  int r = d.rank();
  switch (d.type_letter()) {
    case 'B': return r * (2 * r + 1);
    case 'D': return r * (2 * r - 1);
    case 'E': return r == 6 ? 78 : r == 7 ? 133 : 248;
    case 'F': return 52;
    default: return 14;
  }
}

std::size_t closure_long_count(const RootDatum& d) {
  auto all = oracle::reflection_closure(d.simple_roots());
  Rational top = 0;
  for (const auto& a : all) top = std::max(top, dot(a, a));
  std::size_t n = 0;
  for (const auto& a : all) n += dot(a, a) == top ? 1 : 0;
  return n;
}

std::string join(const std::vector<std::string>& v, std::size_t limit = 4) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? "; " : "") + v[i];
  if (v.size() > limit) s += "; +" + std::to_string(v.size() - limit) + " more";
  return s;
}

Outcome c1(const std::vector<RootDatum>& gs) {
  Outcome o;
  // Only the library computation counts against the budget.
  double dt = 0;
  for (const auto& d : gs) {
    auto t0 = std::chrono::steady_clock::now();
    auto n = adjoint_fixed_points(d).size();
    dt += seconds_since(t0);
    auto want = closure_long_count(d);
    o.require(n == want, d.name() + ": " + std::to_string(n) + " fixed points, oracle " + std::to_string(want));
  }
  o.require(dt < kFixedPointBudget, "took " + std::to_string(dt) + " s");
  std::printf("  fixed-point enumeration: %.3f s\n", dt);
  return o;
}

Outcome c2(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    int dim = gp_dimension(d, adjoint_parabolic(d));
    o.require(dim == expected_adjoint_dimension(d), d.name() + ": dim X_G = " + std::to_string(dim));
    int n = (dim - 1) / 2;
    auto hex = s2_projection(d);
    auto one = WeightVector(std::initializer_list<long>{1}, Lattice::Rank1);
    for (int k = 0; k < 6; ++k) {
      auto z1 = components_at(fixed_components(d, line_projection(d, hex, k)), one);
      o.require(component_dimensions(z1) == std::vector<int>{n - 1},
                d.name() + ": Z_1 of pi_" + std::to_string(k) + " is not a single (n-1)-fold");
    }
  }
  return o;
}

Outcome c3(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    auto hex = s2_projection(d);
    std::map<WeightVector, int> fibre;
    std::vector<WeightVector> image;
    for (const auto& a : d.roots()) {
      auto w = hex.projection.apply(a);
      fibre[w]++;
      image.push_back(w);
    }
    for (int k = 0; k < 6; ++k)
      o.require(fibre[hex.frame.a(k)] == 1, d.name() + ": fibre over alpha_" + std::to_string(k) + " has " +
                                                std::to_string(fibre[hex.frame.a(k)]) + " roots");
    auto poly = make_polytope(image);
    o.require(poly.vertices.size() == 6, d.name() + ": image has " + std::to_string(poly.vertices.size()) + " vertices");
  }
  return o;
}

Outcome c4(const std::vector<RootDatum>& gs) {
  Outcome o;
  auto zero = WeightVector({0, 0}, Lattice::Rank2);
  for (const auto& d : gs) {
    auto hex = s2_projection(d);
    auto g2 = grade_algebra(d, hex.projection);
    o.require(total_dimension(g2) == expected_lie_dimension(d), d.name() + ": rank-two grading sums to " +
                                                                     std::to_string(total_dimension(g2)));
    for (int k = 0; k < 6; ++k) {
      auto g1 = grade_algebra(d, line_projection(d, hex, k));
      o.require(total_dimension(g1) == expected_lie_dimension(d), d.name() + ": rank-one grading sum");
    }
    int g0 = g2.count(zero) ? g2.at(zero).dimension : 0;
    if (d.name() == "B6") o.require(g0 == 24, "B6: g0 = " + std::to_string(g0));
    if (d.name() == "E6") o.require(g0 == 18, "E6: g0 = " + std::to_string(g0));
  }
  return o;
}

Outcome c5(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    auto hex = s2_projection(d);
    auto want2 = factors_name(expected_zero_part(d.type(), 2));
    auto got2 = factors_name(zero_part_type(d, hex.projection));
    o.require(want2 == got2, d.name() + ": g0^2 " + got2 + ", expected " + want2);
    auto want1 = factors_name(expected_zero_part(d.type(), 1));
    for (int k = 0; k < 6; ++k) {
      auto got1 = factors_name(zero_part_type(d, line_projection(d, hex, k)));
      o.require(want1 == got1, d.name() + ": g0^1 " + got1 + ", expected " + want1);
    }
  }
  return o;
}

std::string dims_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Outcome c6(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    for (const auto& c : verify_freudenthal_table(d).cells) {
      o.require(c.ok(), d.name() + " " + c.cell + ": table " + c.expected_variety + " " + dims_text(c.expected_dims) +
                            ", computed " + dims_text(c.actual_dims));
    }
  }
  return o;
}

Outcome c7(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    auto rep = verify_hexagon_compasses(d);
    for (const auto& c : rep.checks)
      o.require(c.ok(), d.name() + " " + c.component + ": " + c.actual.to_string() + " vs " + c.expected.to_string());
    for (const auto& p : rep.problems) o.require(false, d.name() + ": " + p);
    int n = rep.n;
    std::vector<Y0Row> want;
    char l = d.type_letter();
    if ((l == 'B' || l == 'D') && 2 * n - 11 >= 0) {
      std::size_t comps = (l == 'D' && d.rank() == 5) ? 2 : 1;
      want.assign(comps, Y0Row{2, 2 * n + 1, 2 * n - 11, 12});
    }
    if (d.name() == "E6") want.assign(2, Y0Row{3, 21, 3, 18});
    if (d.name() == "E7") want = {Y0Row{4, 33, 9, 24}};
    if (d.name() == "E8") want = {Y0Row{6, 57, 21, 36}};
    o.require(rep.y0_rows == want, d.name() + ": Y_0 rows differ from (mult, dim X, dim Y, codim) table");
    for (const auto& row : rep.y0_rows) o.require(row.codim == 6 * row.multiplicity, d.name() + ": codim != 6 mult");
  }
  return o;
}

Outcome c8(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    auto rep = contact_compass_checks(d);
    o.require(rep.points_checked == long_roots(d).size(), d.name() + ": not every fixed point checked");
    for (const auto& v : rep.violations) o.require(false, d.name() + " at " + v.point.to_string() + ": " + v.what);
  }
  return o;
}

Outcome c9(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    auto x = make_adjoint_variety(d);
    auto cs = generic_covectors(d, kSeed, kCovectors);
    o.require(cs.size() >= kCovectors, d.name() + ": too few covectors");
    std::vector<int> ref;
    for (const auto& c : cs) {
      auto b = betti_numbers(downgrade_to_line(d, x, c));
      if (ref.empty()) ref = b;
      o.require(b == ref, d.name() + ": Betti numbers depend on the covector");
    }
    o.require(ref.size() >= 2 && ref[0] == 1 && ref[1] == 1, d.name() + ": b0 or b2 is not 1");
    for (std::size_t k = 0; k < ref.size(); ++k)
      o.require(ref[k] == ref[ref.size() - 1 - k], d.name() + ": Poincare duality fails");
    auto total = static_cast<std::size_t>(std::accumulate(ref.begin(), ref.end(), 0));
    o.require(total == long_roots(d).size(), d.name() + ": sum of Betti numbers " + std::to_string(total));
  }
  return o;
}

Outcome c10(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    auto t0 = std::chrono::steady_clock::now();
    auto x = make_adjoint_variety(d);
    auto pts = evaluation_points(d, kSeed, kEvaluationPoints);
    o.require(pts.size() >= kEvaluationPoints, d.name() + ": too few evaluation points");
    for (const auto& t : pts)
      o.require(localized_character(d, x, t) == oracle::character_sum(d, t), d.name() + ": localization mismatch");
    double dt = seconds_since(t0);
    if (d.name() == "E8") o.require(dt < kE8LocalizationBudget, "E8 took " + std::to_string(dt) + " s");
  }
  return o;
}

Outcome c11(const std::vector<RootDatum>& gs) {
  Outcome o;
  for (const auto& d : gs) {
    auto rep = bandwidth_and_equalization(d);
    for (const auto& p : rep.problems) o.require(false, d.name() + ": " + p);
    std::map<long, int> residual{{-2, 1}, {-1, rep.n}, {1, 1}};
    for (const auto& line : rep.lines) {
      const auto& z1 = line.z1;
      o.require(line.z1_count == 1 && z1.bandwidth == 3, d.name() + ": Z_1 bandwidth");
      o.require(z1.source_dims == std::vector<int>{0} && z1.sink_dims == std::vector<int>{0},
                d.name() + ": Z_1 extremes are not isolated");
      o.require(line.z1_residual == residual, d.name() + ": residual compass of Z_1");
      for (const auto& z : line.z0) {
        o.require(z.bandwidth == 2, d.name() + ": Z_0 bandwidth " + std::to_string(z.bandwidth));
        int half = (z.dimension - 1) / 2;
        for (int s : z.source_dims) o.require(s == half, d.name() + ": Z_0 source dimension");
        for (int s : z.sink_dims) o.require(s == half, d.name() + ": Z_0 sink dimension");
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const auto gs = groups();
  struct Criterion {
    const char* title;
    std::function<Outcome(const std::vector<RootDatum>&)> run;
  };
  const std::vector<Criterion> criteria{
      {"fixed points match long roots", c1},
      {"adjoint dimensions and Z_1", c2},
      {"hexagon projection fibres and vertices", c3},
      {"grading dimensions", c4},
      {"zero-part types", c5},
      {"Freudenthal components", c6},
      {"hexagon compass formulas and Y_0 rows", c7},
      {"contact weight symmetry", c8},
      {"BB Betti numbers", c9},
      {"localization of the adjoint character", c10},
      {"bandwidth profile", c11},
  };
  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run(gs);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    passed += o.ok ? 1 : 0;
    std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].title, dt,
                o.ok ? "" : " -- ", join(o.notes).c_str());
  }
  std::printf("acceptance: %d/%zu criteria passed over %zu groups\n", passed, criteria.size(), gs.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
