#include "ddg/geometry.hpp"

#include <algorithm>
#include <string>

#include "ddg/error.hpp"

namespace ddg {
namespace {

using Vec = std::array<std::uint32_t, kMaxCoords>;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_dimension(std::uint32_t n) {
  if (n != 2 && n != 4 && n != 6) {
    throw Error(ErrorCode::kInvalidArgument, "projective dimension must be 2, 4 or 6");
  }
}

// Normalizes in place; returns false for the zero vector.
bool normalize(const Field& f, std::span<std::uint32_t> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  if (v[lead] != 1) {
    const std::uint32_t inv = f.inv_raw(v[lead]);
    for (std::size_t i = lead; i < v.size(); ++i) v[i] = f.mul_raw(v[i], inv);
  }
  return true;
}

// One of the six hexagon conditions: p_ab = sign * p_cd, sign = +-1.
struct HexagonCondition {
  std::uint32_t a, b, c, d;
  bool negate;
};

constexpr std::array<HexagonCondition, 6> kHexagonConditions = {{
    {1, 2, 3, 4, true},
    {5, 4, 3, 2, false},
    {2, 0, 3, 5, true},
    {6, 5, 3, 0, false},
    {0, 1, 3, 6, true},
    {4, 6, 3, 1, false},
}};

// Null space basis of `rows` (each of width `cols`) over the field.
std::vector<Vec> null_space(const Field& f, std::vector<Vec> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint32_t inv = f.inv_raw(rows[r][c]);
    for (std::size_t k = 0; k < cols; ++k) rows[r][k] = f.mul_raw(rows[r][k], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint32_t factor = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[i][k] = f.sub_raw(rows[i][k], f.mul_raw(factor, rows[r][k]));
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v{};
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.neg_raw(rows[i][free]);
    basis.push_back(v);
  }
  return basis;
}

// Reduces `v` against the echelon rows `basis` (each with a leading 1 in
// `lead`); returns true when something independent remains.
bool reduce_against(const Field& f, Vec& v, const std::vector<Vec>& basis,
                    const std::vector<std::size_t>& lead, std::size_t cols) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::uint32_t c = v[lead[i]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < cols; ++k) v[k] = f.sub_raw(v[k], f.mul_raw(c, basis[i][k]));
  }
  for (std::size_t k = 0; k < cols; ++k) {
    if (v[k] != 0) return true;
  }
  return false;
}

void finish_line(GeometryLine& line) {
  std::sort(line.points.begin(), line.points.end());
  line.basis = {line.points[0], line.points[1]};
}

void sort_lines(std::vector<GeometryLine>& lines) {
  std::sort(lines.begin(), lines.end(),
            [](const GeometryLine& a, const GeometryLine& b) { return a.basis < b.basis; });
}

}  // namespace

ProjectivePoint ProjectivePoint::normalized(const Field& field, std::span<const std::uint32_t> coords) {
  if (coords.size() > kMaxCoords || coords.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "unsupported coordinate count");
  }
  ProjectivePoint pt;
  pt.size_ = coords.size();
  std::copy(coords.begin(), coords.end(), pt.coords_.begin());
  for (std::size_t i = 0; i < pt.size_; ++i) {
    if (pt.coords_[i] >= field.q()) throw Error(ErrorCode::kInvalidArgument, "coordinate outside field");
  }
  if (!normalize(field, {pt.coords_.data(), pt.size_})) {
    throw Error(ErrorCode::kInvalidArgument, "zero vector is not a projective point");
  }
  return pt;
}

std::uint64_t projective_point_count(std::uint32_t n, std::uint32_t q) {
  return (ipow(q, n + 1) - 1) / (q - 1);
}

std::uint64_t projective_rank(const Field& field, std::span<const std::uint32_t> v) {
  const std::uint64_t q = field.q();
  const std::size_t n = v.size() - 1;
  std::size_t lead = 0;
  while (v[lead] == 0) ++lead;
  std::uint64_t before = (ipow(q, static_cast<std::uint32_t>(n - lead)) - 1) / (q - 1);
  std::uint64_t value = 0;
  for (std::size_t i = lead + 1; i <= n; ++i) value = value * q + v[i];
  return before + value;
}

std::vector<ProjectivePoint> enumerate_projective_points(std::uint32_t n, const Field& field) {
  check_dimension(n);
  const std::uint32_t q = field.q();
  std::vector<ProjectivePoint> out;
  out.reserve(projective_point_count(n, q));
  std::array<std::uint32_t, kMaxCoords> v{};
  for (std::uint32_t lead = n + 1; lead-- > 0;) {
    const std::uint32_t free = n - lead;
    const std::uint64_t count = ipow(q, free);
    for (std::uint64_t value = 0; value < count; ++value) {
      v.fill(0);
      v[lead] = 1;
      std::uint64_t x = value;
      for (std::uint32_t i = n; i > lead; --i) {
        v[i] = static_cast<std::uint32_t>(x % q);
        x /= q;
      }
      out.push_back(ProjectivePoint::normalized(field, {v.data(), n + 1}));
    }
  }
  return out;
}

QuadraticForm QuadraticForm::parabolic(std::uint32_t dimension) {
  if (dimension != 4 && dimension != 6) {
    throw Error(ErrorCode::kInvalidArgument, "parabolic forms exist here for dimension 4 or 6");
  }
  return QuadraticForm(dimension);
}

std::uint32_t QuadraticForm::evaluate(const Field& f, std::span<const std::uint32_t> x) const {
  if (dimension_ == 4) {
    std::uint32_t s = f.mul_raw(x[0], x[0]);
    s = f.add_raw(s, f.mul_raw(x[1], x[2]));
    return f.add_raw(s, f.mul_raw(x[3], x[4]));
  }
  std::uint32_t s = f.mul_raw(x[3], x[3]);
  s = f.add_raw(s, f.mul_raw(x[0], x[4]));
  s = f.add_raw(s, f.mul_raw(x[1], x[5]));
  return f.add_raw(s, f.mul_raw(x[2], x[6]));
}

std::uint32_t QuadraticForm::polar(const Field& f, std::span<const std::uint32_t> x,
                                   std::span<const std::uint32_t> y) const {
  auto cross = [&](std::size_t i, std::size_t j) {
    return f.add_raw(f.mul_raw(x[i], y[j]), f.mul_raw(x[j], y[i]));
  };
  if (dimension_ == 4) {
    const std::uint32_t sq = f.mul_raw(f.add_raw(1, 1), f.mul_raw(x[0], y[0]));
    return f.add_raw(sq, f.add_raw(cross(1, 2), cross(3, 4)));
  }
  const std::uint32_t sq = f.mul_raw(f.add_raw(1, 1), f.mul_raw(x[3], y[3]));
  return f.add_raw(f.add_raw(sq, cross(0, 4)), f.add_raw(cross(1, 5), cross(2, 6)));
}

PointSet::PointSet(std::uint32_t dimension, const Field& field, std::vector<ProjectivePoint> points)
    : dimension_(dimension), points_(std::move(points)) {
  const std::uint64_t total = projective_point_count(dimension, field.q());
  if (total > (1ull << 28)) {
    throw Error(ErrorCode::kInvalidArgument, "projective space too large for a dense point index");
  }
  index_of_rank_.assign(total, kAbsent);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    index_of_rank_[projective_rank(field, points_[i].coords())] = static_cast<std::uint32_t>(i);
  }
}

std::uint32_t PointSet::find(const Field& field, std::span<const std::uint32_t> normalized) const {
  return index_of_rank_[projective_rank(field, normalized)];
}

PlueckerVector pluecker(const Field& f, std::span<const std::uint32_t> a,
                        std::span<const std::uint32_t> b) {
  PlueckerVector out;
  const std::size_t m = a.size();
  out.components.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      out.components.push_back(f.sub_raw(f.mul_raw(a[i], b[j]), f.mul_raw(a[j], b[i])));
    }
  }
  if (!normalize(f, out.components)) {
    throw Error(ErrorCode::kInvalidArgument, "dependent basis has no Pluecker vector");
  }
  return out;
}

std::uint32_t pluecker_at(const Field& f, const PlueckerVector& v, std::uint32_t i, std::uint32_t j) {
  if (i == j) return 0;
  std::uint32_t m = 2;
  while (m * (m - 1) / 2 < v.components.size()) ++m;
  const bool swapped = i > j;
  if (swapped) std::swap(i, j);
  const std::uint32_t value = v.components[i * m - i * (i + 1) / 2 + (j - i - 1)];
  return swapped ? f.neg_raw(value) : value;
}

bool satisfies_hexagon_equations(const Field& f, const PlueckerVector& v) {
  for (const HexagonCondition& c : kHexagonConditions) {
    std::uint32_t rhs = pluecker_at(f, v, c.c, c.d);
    if (c.negate) rhs = f.neg_raw(rhs);
    if (pluecker_at(f, v, c.a, c.b) != rhs) return false;
  }
  return true;
}

PointSet quadric_points(const QuadraticForm& form, const Field& field) {
  std::vector<ProjectivePoint> all = enumerate_projective_points(form.dimension(), field);
  std::vector<ProjectivePoint> on;
  for (const ProjectivePoint& pt : all) {
    if (form.evaluate(field, pt.coords()) == 0) on.push_back(pt);
  }
  return PointSet(form.dimension(), field, std::move(on));
}

std::vector<GeometryLine> lines_on_quadric(const QuadraticForm& form, const Field& f,
                                           const PointSet& points) {
  const std::size_t m = form.dimension() + 1;
  const std::uint32_t q = f.q();
  std::vector<GeometryLine> lines;
  Vec v{};
  for (std::uint32_t a = 0; a < points.size(); ++a) {
    const auto pa = points[a].coords();
    for (std::uint32_t b = a + 1; b < points.size(); ++b) {
      const auto pb = points[b].coords();
      if (form.polar(f, pa, pb) != 0) continue;
      GeometryLine line;
      line.points.reserve(q + 1);
      line.points.push_back(a);
      bool canonical = true;
      for (std::uint32_t t = 0; t < q && canonical; ++t) {
        for (std::size_t i = 0; i < m; ++i) v[i] = f.add_raw(pb[i], f.mul_raw(t, pa[i]));
        normalize(f, {v.data(), m});
        const std::uint32_t id = points.find(f, {v.data(), m});
        if (id == PointSet::kAbsent) {
          throw Error(ErrorCode::kSelectionInvalid, "singular line leaves the quadric");
        }
        if (id < b) canonical = false;
        line.points.push_back(id);
      }
      if (!canonical) continue;
      finish_line(line);
      lines.push_back(std::move(line));
    }
  }
  sort_lines(lines);
  return lines;
}

std::vector<GeometryLine> hexagon_lines(const Field& f, const PointSet& points) {
  if (points.dimension() != 6) {
    throw Error(ErrorCode::kInvalidArgument, "hexagon lines live on the dimension-6 quadric");
  }
  constexpr std::size_t m = 7;
  const std::uint32_t q = f.q();
  const QuadraticForm form = QuadraticForm::parabolic(6);
  std::vector<GeometryLine> lines;
  std::vector<std::uint32_t> per_point(points.size(), 0);
  Vec v{};

  for (std::uint32_t pid = 0; pid < points.size(); ++pid) {
    const auto p = points[pid].coords();
    std::vector<Vec> rows;
    for (const HexagonCondition& c : kHexagonConditions) {
      // p_ab(p, x) - s p_cd(p, x), linear in x
      Vec row{};
      auto add = [&](std::size_t col, std::uint32_t val) { row[col] = f.add_raw(row[col], val); };
      add(c.b, p[c.a]);
      add(c.a, f.neg_raw(p[c.b]));
      const std::uint32_t s = c.negate ? f.neg_raw(1) : 1;
      add(c.d, f.neg_raw(f.mul_raw(s, p[c.c])));
      add(c.c, f.mul_raw(s, p[c.d]));
      rows.push_back(row);
    }
    Vec polar_row{};
    for (std::size_t i = 0; i < m; ++i) {
      Vec e{};
      e[i] = 1;
      polar_row[i] = form.polar(f, p, {e.data(), m});
    }
    rows.push_back(polar_row);

    std::vector<Vec> kernel = null_space(f, rows, m);
    if (kernel.size() != 3) {
      throw Error(ErrorCode::kSelectionInvalid,
                  "hexagon conditions at point " + std::to_string(pid) + " leave a " +
                      std::to_string(kernel.size()) + "-dimensional space instead of a plane");
    }

    // Extend {p} to a basis {p, a, b} of the plane.
    std::vector<Vec> echelon;
    std::vector<std::size_t> lead;
    auto push = [&](Vec w) {
      if (!reduce_against(f, w, echelon, lead, m)) return false;
      std::size_t l = 0;
      while (w[l] == 0) ++l;
      const std::uint32_t inv = f.inv_raw(w[l]);
      for (std::size_t k = 0; k < m; ++k) w[k] = f.mul_raw(w[k], inv);
      for (std::size_t i = 0; i < echelon.size(); ++i) {
        const std::uint32_t c = echelon[i][l];
        if (c == 0) continue;
        for (std::size_t k = 0; k < m; ++k) echelon[i][k] = f.sub_raw(echelon[i][k], f.mul_raw(c, w[k]));
      }
      echelon.push_back(w);
      lead.push_back(l);
      return true;
    };
    Vec pv{};
    std::copy(p.begin(), p.end(), pv.begin());
    push(pv);
    std::vector<Vec> complement;
    for (const Vec& k : kernel) {
      if (push(k)) complement.push_back(k);
    }
    if (complement.size() != 2) {
      throw Error(ErrorCode::kSelectionInvalid, "point does not lie in its own hexagon plane");
    }

    // Directions b and a + t b for t in GF(q) give the q+1 lines through p.
    for (std::uint32_t t = 0; t <= q; ++t) {
      Vec dir{};
      for (std::size_t i = 0; i < m; ++i) {
        dir[i] = t == q ? complement[1][i] : f.add_raw(complement[0][i], f.mul_raw(t, complement[1][i]));
      }
      GeometryLine line;
      line.points.reserve(q + 1);
      line.points.push_back(pid);
      bool canonical = true;
      for (std::uint32_t s = 0; s < q; ++s) {
        for (std::size_t i = 0; i < m; ++i) v[i] = f.add_raw(dir[i], f.mul_raw(s, p[i]));
        normalize(f, {v.data(), m});
        const std::uint32_t id = points.find(f, {v.data(), m});
        if (id == PointSet::kAbsent) {
          throw Error(ErrorCode::kSelectionInvalid, "selected line leaves the quadric");
        }
        if (id < pid) canonical = false;
        line.points.push_back(id);
      }
      if (!canonical) continue;
      finish_line(line);
      for (std::uint32_t id : line.points) ++per_point[id];
      lines.push_back(std::move(line));
    }
  }

  for (std::size_t i = 0; i < per_point.size(); ++i) {
    if (per_point[i] != q + 1) {
      throw Error(ErrorCode::kSelectionInvalid, "point " + std::to_string(i) + " lies on " +
                                                    std::to_string(per_point[i]) + " hexagon lines");
    }
  }
  if (lines.size() != points.size()) {
    throw Error(ErrorCode::kSelectionInvalid, "hexagon line count differs from point count");
  }
  sort_lines(lines);
  return lines;
}

std::vector<GeometryLine> hexagon_lines_by_filter(const Field& f, const PointSet& points) {
  const QuadraticForm form = QuadraticForm::parabolic(6);
  std::vector<GeometryLine> selected;
  for (GeometryLine& line : lines_on_quadric(form, f, points)) {
    const PlueckerVector pv = pluecker(f, points[line.basis[0]].coords(), points[line.basis[1]].coords());
    if (satisfies_hexagon_equations(f, pv)) selected.push_back(std::move(line));
  }
  std::vector<std::uint32_t> per_point(points.size(), 0);
  for (const GeometryLine& line : selected) {
    for (std::uint32_t id : line.points) ++per_point[id];
  }
  for (std::uint32_t c : per_point) {
    if (c != f.q() + 1) throw Error(ErrorCode::kSelectionInvalid, "hexagon selection is not (q+1)-regular");
  }
  return selected;
}

std::vector<GeometryLine> projective_plane_lines(const Field& f, const PointSet& points) {
  if (points.dimension() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "plane lines need the points of PG(2, q)");
  }
  std::vector<GeometryLine> lines;
  lines.reserve(points.size());
  for (const ProjectivePoint& dual : points.points()) {
    GeometryLine line;
    for (std::uint32_t id = 0; id < points.size(); ++id) {
      const auto x = points[id].coords();
      std::uint32_t dot = 0;
      for (std::size_t i = 0; i < 3; ++i) dot = f.add_raw(dot, f.mul_raw(dual[i], x[i]));
      if (dot == 0) line.points.push_back(id);
    }
    finish_line(line);
    lines.push_back(std::move(line));
  }
  sort_lines(lines);
  return lines;
}

std::vector<ProjectivePoint> line_points(const GeometryLine& line, const PointSet& points) {
  std::vector<ProjectivePoint> out;
  out.reserve(line.points.size());
  for (std::uint32_t id : line.points) out.push_back(points[id]);
  return out;
}

}  // namespace ddg
