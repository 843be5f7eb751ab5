#include "adjc/downgrade.hpp"

#include <algorithm>

#include "adjc/errors.hpp"
#include "adjc/table.hpp"

namespace adjc {

Projection::Projection(Lattice source, Lattice target, std::vector<std::vector<Rational>> matrix)
    : source_(source), target_(target), matrix_(std::move(matrix)) {
  for (const auto& row : matrix_) {
    if (row.size() != matrix_[0].size()) throw InvalidInput("projection matrix is ragged");
  }
}

WeightVector Projection::apply(const WeightVector& v) const {
  if (v.lattice() != source_ || v.dim() != source_dim()) {
    throw InvalidInput(std::string("projection expects a vector of ") + lattice_name(source_));
  }
  std::vector<Rational> out(target_dim());
  for (std::size_t r = 0; r < out.size(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) out[r] += matrix_[r][c] * v[c];
  }
  return WeightVector(std::move(out), target_);
}

Projection compose(const Projection& outer, const Projection& inner) {
  if (outer.source() != inner.target() || outer.source_dim() != inner.target_dim()) {
    throw InvalidInput("projections do not compose");
  }
  std::vector<std::vector<Rational>> m(outer.target_dim(), std::vector<Rational>(inner.source_dim()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < inner.source_dim(); ++c)
      for (std::size_t s = 0; s < inner.target_dim(); ++s) m[r][c] += outer.matrix()[r][s] * inner.matrix()[s][c];
  return Projection(inner.source(), outer.target(), std::move(m));
}

void attach_kernel_roots(const RootDatum& datum, Projection& projection) {
  projection.kernel_roots.clear();
  for (const auto& r : datum.roots())
    if (projection.apply(r).is_zero()) projection.kernel_roots.push_back(r);
}

Rational HexagonFrame::inner(const WeightVector& x, const WeightVector& y) const {
  Rational s = 0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) s += x[r] * gram[r][c] * y[c];
  return s;
}

namespace {

std::array<int, 2> hexagon_pair(const RootDatum& datum) {
  switch (datum.type_letter()) {
    case 'B':
    case 'D': return {1, 2};
    case 'E': return datum.rank() == 6 ? std::array<int, 2>{4, 2} : datum.rank() == 7 ? std::array<int, 2>{3, 1} : std::array<int, 2>{7, 8};
    case 'F': return {2, 1};
    case 'G': return {0, 0};
    default: throw InvalidInput("no hexagon downgrading for type " + datum.name());
  }
}

WeightVector to_rank1(long x) { return WeightVector(std::initializer_list<long>{x}, Lattice::Rank1); }

}  // namespace

HexagonDowngrade s2_projection(const RootDatum& datum) {
  HexagonDowngrade hex;
  hex.nodes = hexagon_pair(datum);
  if (datum.type_letter() == 'G') {
    hex.root_i = datum.simple_root(2);
    hex.root_j = datum.simple_root(1) * Rational(3) + datum.simple_root(2);
  } else {
    hex.root_i = datum.simple_root(hex.nodes[0]);
    hex.root_j = datum.simple_root(hex.nodes[1]);
  }
  const auto& a = hex.root_i;
  const auto& b = hex.root_j;
  if (dot(a, a) != datum.long_squared_length() || dot(b, b) != dot(a, a) || dot(a, b) * 2 != -dot(a, a)) {
    throw StructuralError("hexagon pair of " + datum.name() + " is not two long roots at angle 2pi/3");
  }

  const WeightVector u = a;
  const WeightVector v = (a * Rational(2) + b) * Rational(1, 3);
  std::array<std::array<Rational, 2>, 2> g{{{dot(u, u), dot(u, v)}, {dot(v, u), dot(v, v)}}};
  Rational det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  std::array<std::array<Rational, 2>, 2> ginv{{{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}}};
  std::vector<std::vector<Rational>> m(2, std::vector<Rational>(datum.ambient_dim()));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < datum.ambient_dim(); ++c) m[r][c] = ginv[r][0] * u[c] + ginv[r][1] * v[c];
  hex.projection = Projection(Lattice::Ambient, Lattice::Rank2, std::move(m));
  attach_kernel_roots(datum, hex.projection);

  auto& f = hex.frame;
  f.gram = g;
  f.alpha[0] = hex.projection.apply(a);
  f.alpha[1] = hex.projection.apply(a + b);
  f.alpha[2] = hex.projection.apply(b);
  for (std::size_t k = 0; k < 3; ++k) f.alpha[k + 3] = -f.alpha[k];
  for (int k = 0; k < 6; ++k) f.beta[static_cast<std::size_t>(k)] = (f.a(k) + f.a(k + 1)) * Rational(1, 3);
  return hex;
}

std::array<Projection, 6> s1_projections(const HexagonFrame& frame) {
  std::array<Projection, 6> out;
  for (int k = 0; k < 6; ++k) {
    const auto& a = frame.a(k - 1);
    Rational scale = Rational(2) / frame.inner(a, a);
    std::vector<Rational> row(2);
    for (std::size_t c = 0; c < 2; ++c) row[c] = scale * (a[0] * frame.gram[0][c] + a[1] * frame.gram[1][c]);
    out[static_cast<std::size_t>(k)] = Projection(Lattice::Rank2, Lattice::Rank1, {row});
  }
  return out;
}

Projection line_projection(const RootDatum& datum, const HexagonDowngrade& hex, int k) {
  auto pis = s1_projections(hex.frame);
  Projection p = compose(pis[static_cast<std::size_t>(((k % 6) + 6) % 6)], hex.projection);
  attach_kernel_roots(datum, p);
  return p;
}

GradedDecomposition grade_algebra(const RootDatum& datum, const Projection& projection) {
  GradedDecomposition grading;
  grading[WeightVector::zero(projection.target_dim(), projection.target())].dimension = datum.rank();
  for (const auto& r : datum.roots()) {
    auto& piece = grading[projection.apply(r)];
    piece.dimension += 1;
    piece.roots.push_back(r);
  }
  return grading;
}

int total_dimension(const GradedDecomposition& grading) {
  int total = 0;
  for (const auto& [m, piece] : grading) total += piece.dimension;
  return total;
}

std::vector<DynkinType> zero_part_type(const RootDatum& datum, const Projection& projection) {
  std::vector<WeightVector> kernel;
  for (const auto& r : datum.roots())
    if (projection.apply(r).is_zero()) kernel.push_back(r);
  return identify_type(datum, kernel);
}

std::vector<ComponentRecord> fixed_components(const RootDatum& datum, const AdjointVariety& variety,
                                              const Projection& projection) {
  std::vector<WeightVector> kernel;
  for (const auto& r : datum.roots())
    if (projection.apply(r).is_zero()) kernel.push_back(r);

  std::map<WeightVector, std::size_t> index_of;
  std::map<WeightVector, std::vector<WeightVector>> fibres;
  for (std::size_t p = 0; p < variety.points.size(); ++p) {
    const auto& w = variety.points[p].weight;
    index_of[w] = p;
    fibres[projection.apply(w)].push_back(w);
  }

  std::vector<ComponentRecord> out;
  for (const auto& [weight, members] : fibres) {
    for (auto& orbit : subgroup_orbit_partition(datum, members, kernel)) {
      ComponentRecord rec;
      rec.weight = weight;
      rec.members = std::move(orbit);
      bool first = true;
      for (const auto& y : rec.members) {
        int dim = 0;
        Compass projected;
        for (const auto& [entry, mult] : variety.compasses[index_of.at(y)].entries()) {
          WeightVector image = projection.apply(entry);
          if (image.is_zero()) dim += mult;
          else projected.add(image, mult);
        }
        if (first) {
          rec.dimension = dim;
          rec.compass = std::move(projected);
          first = false;
        } else if (dim != rec.dimension || projected != rec.compass) {
          throw ConsistencyError("fixed points " + rec.members.front().to_string() + " and " + y.to_string() +
                                 " of one component disagree");
        }
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<ComponentRecord> fixed_components(const RootDatum& datum, const Projection& projection) {
  return fixed_components(datum, make_adjoint_variety(datum), projection);
}

std::vector<ComponentRecord> components_at(const std::vector<ComponentRecord>& components,
                                           const WeightVector& weight) {
  std::vector<ComponentRecord> out;
  for (const auto& c : components)
    if (c.weight == weight) out.push_back(c);
  return out;
}

std::vector<int> component_dimensions(const std::vector<ComponentRecord>& components) {
  std::vector<int> dims;
  for (const auto& c : components) dims.push_back(c.dimension);
  std::sort(dims.begin(), dims.end());
  return dims;
}

int contact_half_dimension(const RootDatum& datum) {
  int dim = gp_dimension(datum, adjoint_parabolic(datum));
  if (dim % 2 == 0) throw ConsistencyError("adjoint variety of " + datum.name() + " has even dimension");
  return (dim - 1) / 2;
}

bool FreudenthalReport::ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellCheck& c) { return c.ok(); });
}

FreudenthalReport verify_freudenthal_table(const RootDatum& datum) {
  const auto& table = FreudenthalTable::builtin();
  const DynkinType type = datum.type();
  FreudenthalReport report;
  report.group = datum.name();

  auto make_cell = [&](const std::string& cell) {
    CellCheck c;
    c.cell = cell;
    const auto& rec = table.record(type, cell);
    c.expected_variety = describe(rec.components, type.rank);
    c.expected_dims = expected_dimensions(rec.components, type.rank);
    return c;
  };

  CellCheck xg = make_cell("X_G");
  xg.actual_dims = {gp_dimension(datum, adjoint_parabolic(datum))};
  report.cells.push_back(xg);

  const auto variety = make_adjoint_variety(datum);
  const auto hex = s2_projection(datum);
  const auto hex_components = fixed_components(datum, variety, hex.projection);

  CellCheck zm = make_cell("Z_m"), z0 = make_cell("Z_0"), ym = make_cell("Y_m"), y0 = make_cell("Y_0");
  for (int k = 0; k < 6; ++k) {
    auto line = fixed_components(datum, variety, line_projection(datum, hex, k));
    auto dm = component_dimensions(components_at(line, to_rank1(1)));
    auto d0 = component_dimensions(components_at(line, to_rank1(0)));
    auto db = component_dimensions(components_at(hex_components, hex.frame.b(k)));
    if (k == 0) {
      zm.actual_dims = dm;
      z0.actual_dims = d0;
      ym.actual_dims = db;
    }
    if (dm != zm.expected_dims) zm.failing_indices.push_back(k);
    if (d0 != z0.expected_dims) z0.failing_indices.push_back(k);
    if (db != ym.expected_dims) ym.failing_indices.push_back(k);
  }
  y0.actual_dims = component_dimensions(components_at(hex_components, WeightVector::zero(2, Lattice::Rank2)));
  report.cells.push_back(zm);
  report.cells.push_back(z0);
  report.cells.push_back(ym);
  report.cells.push_back(y0);
  return report;
}

namespace {

void add_positive(Compass& c, const WeightVector& w, int mult) {
  if (mult > 0) c.add(w, mult);
}

}  // namespace

Compass vertex_compass_formula(const HexagonFrame& f, int i, int n) {
  Compass c;
  add_positive(c, f.a(i + 1) - f.a(i), 1);
  add_positive(c, f.a(i - 1) - f.a(i), 1);
  add_positive(c, -f.a(i), 1);
  add_positive(c, f.b(i) - f.a(i), n - 1);
  add_positive(c, f.b(i - 1) - f.a(i), n - 1);
  return c;
}

Compass beta_compass_formula(const HexagonFrame& f, int i, int n, int d) {
  Compass c;
  add_positive(c, f.b(i - 1) - f.b(i), n - 2 - d);
  add_positive(c, f.b(i + 1) - f.b(i), n - 2 - d);
  add_positive(c, f.b(i - 2) - f.b(i), 1);
  add_positive(c, f.a(i + 1) - f.b(i), 1);
  add_positive(c, f.b(i + 2) - f.b(i), 1);
  add_positive(c, f.a(i) - f.b(i), 1);
  add_positive(c, -f.b(i), d + 1);
  return c;
}

Compass zero_compass_formula(const HexagonFrame& f, int n, int d) {
  int codim = 2 * n + 1 - d;
  if (codim % 6 != 0) throw ConsistencyError("codimension " + std::to_string(codim) + " is not divisible by 6");
  Compass c;
  for (int j = 0; j < 6; ++j) add_positive(c, f.b(j), codim / 6);
  return c;
}

bool HexagonReport::ok() const {
  return problems.empty() && std::all_of(checks.begin(), checks.end(), [](const CompassCheck& c) { return c.ok(); });
}

HexagonReport verify_hexagon_compasses(const RootDatum& datum) {
  HexagonReport report;
  report.group = datum.name();
  report.n = contact_half_dimension(datum);
  const int n = report.n;
  const auto hex = s2_projection(datum);
  const auto& f = hex.frame;
  const auto components = fixed_components(datum, hex.projection);

  for (int i = 0; i < 6; ++i) {
    auto at = components_at(components, f.a(i));
    if (at.size() != 1 || at[0].members.size() != 1 || at[0].dimension != 0) {
      report.problems.push_back("vertex " + std::to_string(i) + " is not a single isolated fixed point");
      continue;
    }
    report.checks.push_back({"y_" + std::to_string(i), vertex_compass_formula(f, i, n), at[0].compass});
  }
  for (int i = 0; i < 6; ++i) {
    auto at = components_at(components, f.b(i));
    for (std::size_t c = 0; c < at.size(); ++c) {
      report.checks.push_back({"Y_beta_" + std::to_string(i) + "[" + std::to_string(c) + "]",
                               beta_compass_formula(f, i, n, at[c].dimension), at[c].compass});
    }
  }
  auto zero = components_at(components, WeightVector::zero(2, Lattice::Rank2));
  for (std::size_t c = 0; c < zero.size(); ++c) {
    const int d = zero[c].dimension;
    const int codim = 2 * n + 1 - d;
    if (codim % 6 != 0) {
      report.problems.push_back("Y_0[" + std::to_string(c) + "] has codimension " + std::to_string(codim));
      continue;
    }
    report.checks.push_back({"Y_0[" + std::to_string(c) + "]", zero_compass_formula(f, n, d), zero[c].compass});
    report.y0_rows.push_back({codim / 6, 2 * n + 1, d, codim});
  }

  for (const auto& comp : components) {
    bool known = comp.weight.is_zero();
    for (int i = 0; i < 6 && !known; ++i) known = comp.weight == f.a(i) || comp.weight == f.b(i);
    if (!known) report.problems.push_back("component over " + comp.weight.to_string() + " outside the hexagon");
  }
  return report;
}

}  // namespace adjc
