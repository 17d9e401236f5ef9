#include "hq/projective.hpp"

#include <sstream>
#include <stdexcept>

namespace hq {

IntMatrix4 operator*(const IntMatrix4& a, const IntMatrix4& b) {
  IntMatrix4 p{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) p[r][c] += a[r][k] * b[k][c];
  return p;
}

IntMatrix4 negated(const IntMatrix4& a) {
  IntMatrix4 n = a;
  for (auto& row : n)
    for (auto& v : row) v = -v;
  return n;
}

IntMatrix4 transposed(const IntMatrix4& a) {
  IntMatrix4 t{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t[c][r] = a[r][c];
  return t;
}

IntMatrix4 identity4() {
  IntMatrix4 m{};
  for (int k = 0; k < 4; ++k) m[k][k] = 1;
  return m;
}

Point make_point(long x, long y, long z, long w) {
  return {FieldElement(x), FieldElement(y), FieldElement(z), FieldElement(w)};
}

Point transform_point(const IntMatrix4& m, const Point& p) {
  Point q{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (m[r][c] == 1) q[r] += p[c];
      else if (m[r][c] == -1) q[r] -= p[c];
      else if (m[r][c] != 0) q[r] += p[c] * FieldElement(static_cast<long>(m[r][c]));
    }
  }
  return q;
}

MPoly compose(const MPoly& f, const IntMatrix4& m) {
  std::vector<MPoly> images;
  for (int r = 0; r < 4; ++r) {
    std::vector<FieldElement> row;
    for (int c = 0; c < 4; ++c) row.emplace_back(static_cast<long>(m[r][c]));
    images.push_back(MPoly::linear_form(row));
  }
  return f.substitute(images);
}

Point normalized(const Point& p) {
  for (const auto& c : p) {
    if (!c.is_zero()) {
      const FieldElement inv = c.inverse();
      Point q;
      for (int k = 0; k < 4; ++k) q[k] = p[k] * inv;
      return q;
    }
  }
  throw std::invalid_argument("zero vector is not a projective point");
}

bool same_point(const Point& a, const Point& b) { return normalized(a) == normalized(b); }

bool point_less(const Point& a, const Point& b) {
  const Point na = normalized(a), nb = normalized(b);
  for (int k = 0; k < 4; ++k) {
    const int c = na[k].compare(nb[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

FieldElement pairing(const PlaneForm& plane, const Point& p) {
  FieldElement s(0);
  for (int k = 0; k < 4; ++k) s += plane[k] * p[k];
  return s;
}

Matrix<FieldElement> stack_points(const std::vector<Point>& points) {
  Matrix<FieldElement> m(points.size(), 4);
  for (std::size_t r = 0; r < points.size(); ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = points[r][c];
  return m;
}

PlaneForm plane_through(const Point& a, const Point& b, const Point& c) {
  const auto kernel = null_space(stack_points({a, b, c}));
  if (kernel.size() != 1) throw std::invalid_argument("points do not span a plane");
  PlaneForm plane;
  for (int k = 0; k < 4; ++k) plane[k] = kernel[0][k];
  return normalized(plane);
}

Line Line::through(const Point& a, const Point& b) {
  const auto ech = reduced_row_echelon(stack_points({a, b}));
  if (ech.pivots.size() != 2) throw std::invalid_argument("points do not span a line");
  Line line;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) line.rows_[r][c] = ech.reduced(r, c);
  return line;
}

bool Line::contains(const Point& p) const { return matrix_rank(stack_points({rows_[0], rows_[1], p})) == 2; }

std::array<MPoly, 4> Line::parameterization() const {
  std::array<MPoly, 4> images{MPoly(2), MPoly(2), MPoly(2), MPoly(2)};
  for (int k = 0; k < 4; ++k) {
    const std::vector<FieldElement> form{rows_[0][k], rows_[1][k]};
    images[k] = MPoly::linear_form(form);
  }
  return images;
}

bool operator==(const Line& a, const Line& b) { return a.rows_ == b.rows_; }

bool operator<(const Line& a, const Line& b) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) {
      const int cmp = a.rows_[r][c].compare(b.rows_[r][c]);
      if (cmp != 0) return cmp < 0;
    }
  return false;
}

bool lines_meet(const Line& a, const Line& b) {
  return matrix_rank(stack_points({a.first(), a.second(), b.first(), b.second()})) <= 3;
}

std::optional<Point> intersection(const Line& a, const Line& b) {
  Matrix<FieldElement> m(4, 4);
  for (int r = 0; r < 4; ++r) {
    m(r, 0) = a.first()[r];
    m(r, 1) = a.second()[r];
    m(r, 2) = -b.first()[r];
    m(r, 3) = -b.second()[r];
  }
  const auto kernel = null_space(m);
  if (kernel.size() != 1) return std::nullopt;
  Point p;
  for (int k = 0; k < 4; ++k) p[k] = kernel[0][0] * a.first()[k] + kernel[0][1] * a.second()[k];
  return normalized(p);
}

std::string point_string(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < 4; ++k) os << (k ? ", " : "") << p[k].to_string();
  os << ")";
  return os.str();
}

}  // namespace hq
