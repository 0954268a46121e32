#include "torusarr/regions.hpp"

#include "torusarr/error.hpp"
#include "torusarr/union_find.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

namespace torusarr::regions {

std::vector<Sheet> lift_hyperplanes(const Subtorus& s, std::size_t dim, std::size_t torus_index) {
  if (s.dim() != dim)
    fail(ErrorCode::DimensionMismatch, "subtorus dimension does not match");
  Int lo = 0, hi = 0;
  for (const Int& a : s.normal()) {
    if (a < 0)
      lo += a;
    else
      hi += a;
  }
  std::vector<Sheet> out;
  Int first = ceil(Rational(lo) - s.offset());
  Int last = floor(Rational(hi) - s.offset());
  for (Int k = first; k <= last; ++k)
    out.push_back(Sheet{torus_index, s.normal(), s.offset() + Rational(k), k});
  return out;
}

std::size_t sheet_count(const Arrangement& arr) {
  std::size_t total = 0;
  for (const Subtorus& s : arr.tori)
    total += lift_hyperplanes(s, arr.dim).size();
  return total;
}

IntVec CellComplex::plane_normal(std::uint32_t plane) const {
  if (plane < 2 * dim) {
    IntVec e(dim);
    e[plane / 2] = 1;
    return e;
  }
  return sheets.at(plane - 2 * dim).normal;
}

Rational CellComplex::plane_rhs(std::uint32_t plane) const {
  if (plane < 2 * dim)
    return Rational(plane % 2);
  return sheets.at(plane - 2 * dim).rhs;
}

namespace {

Rational dot(const IntVec& a, const RatVec& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      s += Rational(a[i]) * x[i];
  return s;
}

LinConstraint as_constraint(const IntVec& normal, Rational rhs, std::int8_t side, bool strict) {
  RatVec n = to_rational(normal);
  if (side > 0)
    return strict ? LinConstraint::greater(std::move(n), std::move(rhs))
                  : LinConstraint::greater_equal(std::move(n), std::move(rhs));
  return strict ? LinConstraint::less(std::move(n), std::move(rhs))
                : LinConstraint::less_equal(std::move(n), std::move(rhs));
}

// Plane normals as rationals, cached for rank tests.
class PlaneTable {
public:
  explicit PlaneTable(const CellComplex& cx) {
    std::uint32_t total = static_cast<std::uint32_t>(2 * cx.dim + cx.sheets.size());
    normals_.reserve(total);
    for (std::uint32_t p = 0; p < total; ++p)
      normals_.push_back(to_rational(cx.plane_normal(p)));
  }

  std::size_t rank_of(const std::vector<std::uint32_t>& planes) const {
    std::vector<RatVec> rows;
    rows.reserve(planes.size());
    for (std::uint32_t p : planes)
      rows.push_back(normals_[p]);
    return rank(std::move(rows));
  }

private:
  std::vector<RatVec> normals_;
};

Cell unit_cube(std::size_t d) {
  Cell cube;
  for (std::size_t i = 0; i < d; ++i) {
    cube.constraints.push_back({static_cast<std::uint32_t>(2 * i), +1});
    cube.constraints.push_back({static_cast<std::uint32_t>(2 * i + 1), -1});
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    CellVertex v;
    v.point.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      bool upper = (mask >> i) & 1;
      v.point[i] = upper ? 1 : 0;
      v.active.push_back(static_cast<std::uint32_t>(2 * i + (upper ? 1 : 0)));
    }
    cube.vertices.push_back(std::move(v));
  }
  return cube;
}

void insert_sorted(std::vector<std::uint32_t>& v, std::uint32_t p) {
  v.insert(std::upper_bound(v.begin(), v.end(), p), p);
}

// Drops constraints that pass through fewer than d vertices: they cannot support a facet.
void prune(Cell& cell, std::size_t d) {
  std::vector<std::uint32_t> dropped;
  std::vector<CellConstraint> kept;
  for (const CellConstraint& c : cell.constraints) {
    std::size_t touching = 0;
    for (const CellVertex& v : cell.vertices)
      if (std::binary_search(v.active.begin(), v.active.end(), c.plane))
        ++touching;
    if (touching >= d)
      kept.push_back(c);
    else
      dropped.push_back(c.plane);
  }
  if (dropped.empty())
    return;
  cell.constraints = std::move(kept);
  std::sort(dropped.begin(), dropped.end());
  for (CellVertex& v : cell.vertices) {
    std::vector<std::uint32_t> active;
    std::set_difference(v.active.begin(), v.active.end(), dropped.begin(), dropped.end(),
                        std::back_inserter(active));
    v.active = std::move(active);
  }
}

RatVec centroid(const Cell& cell, std::size_t d) {
  RatVec c(d);
  for (const CellVertex& v : cell.vertices)
    for (std::size_t i = 0; i < d; ++i)
      c[i] += v.point[i];
  Rational n(static_cast<long>(cell.vertices.size()));
  for (Rational& x : c)
    x /= n;
  return c;
}

struct SplitResult {
  Cell below;
  Cell above;
  RatVec above_values; // plane-normal values at the vertices of `above`
};

// Cuts a cell by normal·x = rhs, given normal·v at each vertex. The plane must have vertices
// strictly on both sides. Two vertices span an edge iff the constraints tight at both have
// rank d-1; every edge with endpoints on opposite sides contributes one new vertex.
SplitResult split(const Cell& cell, const RatVec& values, std::uint32_t plane, const Rational& rhs,
                  const PlaneTable& planes, std::size_t d) {
  SplitResult out;
  out.below.constraints = cell.constraints;
  out.below.constraints.push_back({plane, -1});
  out.above.constraints = cell.constraints;
  out.above.constraints.push_back({plane, +1});

  std::vector<int> side(cell.vertices.size());
  for (std::size_t v = 0; v < cell.vertices.size(); ++v)
    side[v] = cmp(values[v], rhs);

  for (std::size_t v = 0; v < cell.vertices.size(); ++v) {
    CellVertex vert = cell.vertices[v];
    if (side[v] == 0)
      insert_sorted(vert.active, plane);
    if (side[v] <= 0)
      out.below.vertices.push_back(vert);
    if (side[v] >= 0) {
      out.above.vertices.push_back(std::move(vert));
      out.above_values.push_back(values[v]);
    }
  }

  std::vector<std::uint32_t> common;
  for (std::size_t u = 0; u < cell.vertices.size(); ++u) {
    if (side[u] >= 0)
      continue;
    for (std::size_t w = 0; w < cell.vertices.size(); ++w) {
      if (side[w] <= 0)
        continue;
      const CellVertex& vu = cell.vertices[u];
      const CellVertex& vw = cell.vertices[w];
      common.clear();
      std::set_intersection(vu.active.begin(), vu.active.end(), vw.active.begin(), vw.active.end(),
                            std::back_inserter(common));
      if (common.size() + 1 < d || planes.rank_of(common) != d - 1)
        continue;
      Rational lambda = (rhs - values[u]) / (values[w] - values[u]);
      CellVertex cross;
      cross.point.resize(d);
      for (std::size_t i = 0; i < d; ++i)
        cross.point[i] = vu.point[i] + lambda * (vw.point[i] - vu.point[i]);
      cross.active = common;
      insert_sorted(cross.active, plane);
      out.below.vertices.push_back(cross);
      out.above.vertices.push_back(std::move(cross));
      out.above_values.push_back(rhs);
    }
  }
  prune(out.below, d);
  prune(out.above, d);
  return out;
}

std::vector<LinConstraint> closure_constraints(const CellComplex& cx, const Cell& cell, std::size_t axis_shift,
                                               bool shift) {
  std::vector<LinConstraint> out;
  for (const CellConstraint& c : cell.constraints) {
    IntVec n = cx.plane_normal(c.plane);
    Rational r = cx.plane_rhs(c.plane);
    if (shift)
      r -= Rational(n[axis_shift]);
    out.push_back(as_constraint(n, std::move(r), c.side, false));
  }
  return out;
}

// (closure(upper) - e_axis) ∩ closure(lower) ∩ {x_axis = 0} is (d-1)-dimensional.
bool shares_wall_facet(const CellComplex& cx, const Cell& upper, const Cell& lower, std::size_t axis) {
  std::vector<LinConstraint> sys = closure_constraints(cx, upper, axis, true);
  std::vector<LinConstraint> rest = closure_constraints(cx, lower, axis, false);
  sys.insert(sys.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  RatVec e(cx.dim);
  e[axis] = 1;
  sys.push_back(LinConstraint::equal(std::move(e), 0));
  return relative_dim_is(sys, cx.dim, cx.dim - 1);
}

using FacetKey = std::vector<RatVec>;

// Vertices on the wall x_axis = level with that coordinate removed, sorted; empty if the cell
// meets the wall in fewer than d vertices.
FacetKey wall_key(const Cell& cell, std::size_t axis, int level, std::size_t d) {
  FacetKey key;
  for (const CellVertex& v : cell.vertices) {
    if (v.point[axis] != level)
      continue;
    RatVec p = v.point;
    p.erase(p.begin() + static_cast<std::ptrdiff_t>(axis));
    key.push_back(std::move(p));
  }
  if (key.size() < d)
    return {};
  std::sort(key.begin(), key.end());
  return key;
}

bool touches_wall(const Cell& cell, std::size_t axis, int level) {
  return std::any_of(cell.vertices.begin(), cell.vertices.end(),
                     [&](const CellVertex& v) { return v.point[axis] == level; });
}

} // namespace

HPolytope CellComplex::polytope(std::size_t cell) const {
  HPolytope p{dim, {}};
  for (const CellConstraint& c : cells.at(cell).constraints)
    p.constraints.push_back(as_constraint(plane_normal(c.plane), plane_rhs(c.plane), c.side, c.plane >= 2 * dim));
  return p;
}

CellComplex build_cells(const Arrangement& arr, const BuildOptions& opts) {
  validate(arr);
  const std::size_t d = arr.dim;
  CellComplex cx;
  cx.dim = d;
  std::vector<std::pair<std::size_t, std::size_t>> sheet_ranges; // per torus [begin, end)
  for (std::size_t t = 0; t < arr.tori.size(); ++t) {
    std::size_t begin = cx.sheets.size();
    for (Sheet& s : lift_hyperplanes(arr.tori[t], d, t))
      cx.sheets.push_back(std::move(s));
    sheet_ranges.emplace_back(begin, cx.sheets.size());
    if (cx.sheets.size() > opts.max_sheets)
      fail(ErrorCode::ResourceLimit, "arrangement lifts to more than " + std::to_string(opts.max_sheets) +
                                         " sheets in the unit cube");
  }

  cx.blocked_axes.assign(d, false);
  for (const Subtorus& s : arr.tori)
    for (std::size_t i = 0; i < d; ++i)
      if (s.offset() == 0 && s == coordinate_subtorus(d, i, 0))
        cx.blocked_axes[i] = true;

  PlaneTable planes(cx);
  std::vector<Cell> cells{unit_cube(d)};
  for (std::size_t t = 0; t < arr.tori.size(); ++t) {
    auto [begin, end] = sheet_ranges[t];
    const IntVec& normal = arr.tori[t].normal();
    std::vector<Cell> next;
    next.reserve(cells.size());
    for (Cell& cell : cells) {
      RatVec values;
      values.reserve(cell.vertices.size());
      for (const CellVertex& v : cell.vertices)
        values.push_back(dot(normal, v.point));
      // Sheets of one torus are parallel with increasing rhs, so after a cut only the upper
      // piece can meet the remaining ones.
      for (std::size_t s = begin; s < end; ++s) {
        const Rational& rhs = cx.sheets[s].rhs;
        auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        if (!(*lo < rhs && rhs < *hi))
          continue;
        SplitResult r = split(cell, values, static_cast<std::uint32_t>(2 * d + s), rhs, planes, d);
        next.push_back(std::move(r.below));
        cell = std::move(r.above);
        values = std::move(r.above_values);
      }
      next.push_back(std::move(cell));
    }
    cells = std::move(next);
  }

  for (Cell& cell : cells) {
    cell.witness = centroid(cell, d);
    cell.signs.reserve(cx.sheets.size());
    for (const Sheet& s : cx.sheets)
      cell.signs.push_back(dot(s.normal, cell.witness) > s.rhs ? 1 : -1);
  }
  cx.cells = std::move(cells);
  cx.component.resize(cx.cells.size());
  for (std::size_t i = 0; i < cx.cells.size(); ++i)
    cx.component[i] = i;
  cx.region_count = cx.cells.size();
  return cx;
}

void glue(CellComplex& cx, const Arrangement& arr, Gluing strategy) {
  if (arr.dim != cx.dim)
    fail(ErrorCode::DimensionMismatch, "complex and arrangement dimensions differ");
  const std::size_t d = cx.dim;
  UnionFind uf(cx.cells.size());
  for (std::size_t axis = 0; axis < d; ++axis) {
    if (cx.blocked_axes[axis])
      continue;
    if (strategy == Gluing::Indexed) {
      std::map<FacetKey, std::vector<std::size_t>> upper;
      for (std::size_t c = 0; c < cx.cells.size(); ++c)
        if (FacetKey key = wall_key(cx.cells[c], axis, 1, d); !key.empty())
          upper[std::move(key)].push_back(c);
      for (std::size_t c = 0; c < cx.cells.size(); ++c) {
        FacetKey key = wall_key(cx.cells[c], axis, 0, d);
        if (key.empty())
          continue;
        auto it = upper.find(key);
        if (it == upper.end())
          continue;
        for (std::size_t u : it->second)
          if (shares_wall_facet(cx, cx.cells[u], cx.cells[c], axis))
            uf.unite(u, c);
      }
    } else {
      std::vector<std::size_t> upper, lower;
      for (std::size_t c = 0; c < cx.cells.size(); ++c) {
        if (touches_wall(cx.cells[c], axis, 1))
          upper.push_back(c);
        if (touches_wall(cx.cells[c], axis, 0))
          lower.push_back(c);
      }
      for (std::size_t u : upper)
        for (std::size_t l : lower)
          if (shares_wall_facet(cx, cx.cells[u], cx.cells[l], axis))
            uf.unite(u, l);
    }
  }

  std::unordered_map<std::size_t, std::size_t> label;
  for (std::size_t c = 0; c < cx.cells.size(); ++c) {
    auto [it, inserted] = label.emplace(uf.find(c), label.size());
    cx.component[c] = it->second;
  }
  cx.region_count = label.size();
}

CellComplex decompose(const Arrangement& arr, const BuildOptions& opts, Gluing strategy) {
  CellComplex cx = build_cells(arr, opts);
  glue(cx, arr, strategy);
  return cx;
}

std::size_t count_regions(const Arrangement& arr, const BuildOptions& opts) {
  return decompose(arr, opts).region_count;
}

std::vector<RatVec> region_witnesses(const CellComplex& cx) {
  std::vector<RatVec> out(cx.region_count);
  std::vector<bool> seen(cx.region_count, false);
  for (std::size_t c = 0; c < cx.cells.size(); ++c) {
    std::size_t r = cx.component[c];
    if (!seen[r]) {
      seen[r] = true;
      out[r] = cx.cells[c].witness;
    }
  }
  return out;
}

std::vector<RatVec> region_witnesses(const Arrangement& arr, const BuildOptions& opts) {
  return region_witnesses(decompose(arr, opts));
}

} // namespace torusarr::regions
