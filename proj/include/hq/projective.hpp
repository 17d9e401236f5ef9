#pragma once

// Points, planes and lines of P^3 over a quadratic tower.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hq/field.hpp"
#include "hq/linalg.hpp"
#include "hq/mpoly.hpp"

namespace hq {

using Point = std::array<FieldElement, 4>;
using PlaneForm = std::array<FieldElement, 4>;
/// Integer 4x4 matrix acting on column vectors.
using IntMatrix4 = std::array<std::array<int, 4>, 4>;

IntMatrix4 operator*(const IntMatrix4& a, const IntMatrix4& b);
IntMatrix4 negated(const IntMatrix4& a);
IntMatrix4 transposed(const IntMatrix4& a);
IntMatrix4 identity4();

Point make_point(long x, long y, long z, long w);
Point transform_point(const IntMatrix4& m, const Point& p);
/// The linear substitution x -> m x applied to f, i.e. f o m.
MPoly compose(const MPoly& f, const IntMatrix4& m);

/// First nonzero coordinate scaled to 1. Throws on the zero vector.
Point normalized(const Point& p);
bool same_point(const Point& a, const Point& b);
bool point_less(const Point& a, const Point& b);
FieldElement pairing(const PlaneForm& plane, const Point& p);

/// Plane through three independent points, normalized.
PlaneForm plane_through(const Point& a, const Point& b, const Point& c);

/// A line stored by the reduced row echelon form of a 2x4 spanning matrix,
/// which makes equality of lines a coordinate comparison.
class Line {
 public:
  /// Throws std::invalid_argument for dependent points.
  static Line through(const Point& a, const Point& b);

  const Point& first() const { return rows_[0]; }
  const Point& second() const { return rows_[1]; }
  bool contains(const Point& p) const;
  /// Linear form image of the parameterization s*first + t*second.
  std::array<MPoly, 4> parameterization() const;

  friend bool operator==(const Line& a, const Line& b);
  /// Canonical order on echelon forms.
  friend bool operator<(const Line& a, const Line& b);

 private:
  std::array<Point, 2> rows_;
};

Matrix<FieldElement> stack_points(const std::vector<Point>& points);
bool lines_meet(const Line& a, const Line& b);
std::optional<Point> intersection(const Line& a, const Line& b);

std::string point_string(const Point& p);

}  // namespace hq
