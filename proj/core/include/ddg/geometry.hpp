#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ddg/field.hpp"

namespace ddg {

inline constexpr std::size_t kMaxCoords = 7;

// A point of PG(n, q): n+1 homogeneous coordinates with the first nonzero
// coordinate equal to one.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;

  // Normalizes `coords`; throws InvalidArgument for the zero vector.
  static ProjectivePoint normalized(const Field& field, std::span<const std::uint32_t> coords);

  std::size_t size() const { return size_; }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::uint32_t> coords() const { return {coords_.data(), size_}; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.size_ == b.size_ && a.coords_ == b.coords_;
  }

 private:
  std::array<std::uint32_t, kMaxCoords> coords_{};
  std::size_t size_ = 0;
};

// Position of a normalized point in the lexicographic enumeration of PG(n, q).
std::uint64_t projective_rank(const Field& field, std::span<const std::uint32_t> normalized);
std::uint64_t projective_point_count(std::uint32_t n, std::uint32_t q);

// All points of PG(n, q) in lexicographic order of their normalized
// coordinates. n must be 2, 4 or 6.
std::vector<ProjectivePoint> enumerate_projective_points(std::uint32_t n, const Field& field);

// Non-degenerate parabolic quadrics:
//   dimension 4: x0^2 + x1 x2 + x3 x4
//   dimension 6: x3^2 + x0 x4 + x1 x5 + x2 x6
class QuadraticForm {
 public:
  static QuadraticForm parabolic(std::uint32_t dimension);

  std::uint32_t dimension() const { return dimension_; }
  std::uint32_t evaluate(const Field& field, std::span<const std::uint32_t> x) const;
  // B(x, y) = Q(x + y) - Q(x) - Q(y)
  std::uint32_t polar(const Field& field, std::span<const std::uint32_t> x,
                      std::span<const std::uint32_t> y) const;

 private:
  explicit QuadraticForm(std::uint32_t dimension) : dimension_(dimension) {}
  std::uint32_t dimension_;
};

// A point list together with a rank -> list-index lookup.
class PointSet {
 public:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;

  PointSet(std::uint32_t dimension, const Field& field, std::vector<ProjectivePoint> points);

  std::uint32_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<ProjectivePoint>& points() const { return points_; }

  // Index of a normalized coordinate vector, or kAbsent.
  std::uint32_t find(const Field& field, std::span<const std::uint32_t> normalized) const;

 private:
  std::uint32_t dimension_;
  std::vector<ProjectivePoint> points_;
  std::vector<std::uint32_t> index_of_rank_;
};

// Indices refer to the PointSet the line was enumerated from. `points` is
// sorted ascending and `basis` holds its two smallest entries, which is the
// lexicographically least ordered basis of the line.
struct GeometryLine {
  std::array<std::uint32_t, 2> basis{};
  std::vector<std::uint32_t> points;

  friend bool operator==(const GeometryLine&, const GeometryLine&) = default;
};

// 2x2 minors p_ij (i < j, lexicographic pair order) of the 2 x (n+1) basis
// matrix, normalized like a projective point.
struct PlueckerVector {
  std::vector<std::uint32_t> components;

  friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;
};

PlueckerVector pluecker(const Field& field, std::span<const std::uint32_t> a,
                        std::span<const std::uint32_t> b);
// Signed minor p_ij for any i != j (p_ji = -p_ij); zero on the diagonal.
std::uint32_t pluecker_at(const Field& field, const PlueckerVector& v, std::uint32_t i, std::uint32_t j);

PointSet quadric_points(const QuadraticForm& form, const Field& field);

// Every line contained in the quadric, by exhaustive search over point pairs.
std::vector<GeometryLine> lines_on_quadric(const QuadraticForm& form, const Field& field,
                                           const PointSet& points);

// Six linear conditions on Pluecker coordinates cutting the split Cayley
// hexagon out of the lines of the dimension-6 quadric.
bool satisfies_hexagon_equations(const Field& field, const PlueckerVector& v);

// Hexagon lines computed point by point: for a quadric point p the lines
// through p satisfying the six conditions fill a plane, found as the null
// space of the conditions read as linear equations in the second point.
// Throws SelectionInvalid unless every point lies on exactly q+1 lines.
std::vector<GeometryLine> hexagon_lines(const Field& field, const PointSet& points);

// Same set via filtering lines_on_quadric; exhaustive, small q only.
std::vector<GeometryLine> hexagon_lines_by_filter(const Field& field, const PointSet& points);

// PG(2, q): lines are the dual points, ordered like points.
std::vector<GeometryLine> projective_plane_lines(const Field& field, const PointSet& points);

// Points of `line` as coordinates (for checks that need geometry, not ids).
std::vector<ProjectivePoint> line_points(const GeometryLine& line, const PointSet& points);

}  // namespace ddg
