#include "hq/kleinlines.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hq {

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

bool all_zero(const LineCoords& x) {
  return std::all_of(x.begin(), x.end(), [](const FieldElement& v) { return v.is_zero(); });
}

}  // namespace

LineCoords plucker_from_points(const Point& a, const Point& b) {
  LineCoords p;
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    p[k] = a[i] * b[j] - a[j] * b[i];
  }
  if (all_zero(p)) throw std::invalid_argument("points do not span a line");
  return p;
}

LineCoords plucker_of(const Line& line) { return plucker_from_points(line.first(), line.second()); }

FieldElement plucker_relation(const LineCoords& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

LineCoords klein_from_plucker(const LineCoords& p) {
  const FieldElement i = FieldElement::imaginary_unit();
  return {p[0] - p[5], i * (p[0] + p[5]), p[1] + p[4], i * (p[1] - p[4]), p[2] - p[3], i * (p[2] + p[3])};
}

LineCoords plucker_from_klein(const LineCoords& x) {
  const FieldElement i = FieldElement::imaginary_unit();
  const FieldElement half(Rational(1, 2));
  // Inverse of the linear map above.
  return {half * (x[0] - i * x[1]), half * (x[2] - i * x[3]), half * (x[4] - i * x[5]),
          half * (-x[4] - i * x[5]), half * (x[2] + i * x[3]), half * (-x[0] - i * x[1])};
}

LineCoords klein_of(const Line& line) { return klein_from_plucker(plucker_of(line)); }

Line line_from_plucker(const LineCoords& p) {
  if (all_zero(p)) throw std::invalid_argument("zero line coordinates");
  if (!plucker_relation(p).is_zero()) throw std::invalid_argument("coordinates violate the Pluecker relation");
  // For p = a ^ b the skew matrix a b^t - b a^t has rank 2 with columns in span(a, b).
  Matrix<FieldElement> cols(4, 4);
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    cols(j, i) = p[k];
    cols(i, j) = -p[k];
  }
  const auto ech = reduced_row_echelon(cols);
  if (ech.pivots.size() != 2) throw std::logic_error("Pluecker matrix does not have rank 2");
  Point a, b;
  for (int k = 0; k < 4; ++k) {
    a[k] = ech.reduced(0, k);
    b[k] = ech.reduced(1, k);
  }
  return Line::through(a, b);
}

Line line_from_klein(const LineCoords& x) { return line_from_plucker(plucker_from_klein(x)); }

LineCoords normalized(const LineCoords& x) {
  for (const auto& c : x) {
    if (c.is_zero()) continue;
    const FieldElement inv = c.inverse();
    LineCoords out;
    for (int k = 0; k < 6; ++k) out[k] = x[k] * inv;
    return out;
  }
  throw std::invalid_argument("zero line coordinates");
}

bool same_line_coords(const LineCoords& a, const LineCoords& b) { return normalized(a) == normalized(b); }

std::string coords_string(const LineCoords& x) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < 6; ++k) os << (k ? ", " : "") << x[k].to_string();
  os << ")";
  return os.str();
}

FieldElement klein_quadric(const LineCoords& x) { return klein_pairing(x, x); }

FieldElement klein_pairing(const LineCoords& x, const LineCoords& y) {
  FieldElement s(0);
  for (int k = 0; k < 6; ++k) s += x[k] * y[k];
  return s;
}

bool coplanar(const LineCoords& x, const LineCoords& y) { return klein_pairing(x, y).is_zero(); }

SignCharacter generator_signs(Generator g) {
  switch (g) {
    case Generator::sigma1: return {-1, 1, -1, -1, 1, -1};
    case Generator::sigma2: return {-1, -1, 1, -1, -1, 1};
    case Generator::tau1: return {1, 1, -1, -1, -1, -1};
    case Generator::tau2: return {-1, -1, 1, 1, -1, -1};
  }
  throw std::logic_error("unknown generator");
}

SignCharacter sign_character(GroupLabel g) {
  static const Generator gens[4] = {Generator::sigma1, Generator::sigma2, Generator::tau1, Generator::tau2};
  SignCharacter eps{1, 1, 1, 1, 1, 1};
  for (int k = 0; k < 4; ++k) {
    if (!g.exponent(k)) continue;
    const auto row = generator_signs(gens[k]);
    for (int j = 0; j < 6; ++j) eps[j] *= row[j];
  }
  return eps;
}

LineCoords apply_signs(const SignCharacter& eps, const LineCoords& x) {
  LineCoords out;
  for (int k = 0; k < 6; ++k) out[k] = eps[k] > 0 ? x[k] : -x[k];
  return out;
}

LineCoords transport(GroupLabel g, const LineCoords& x) {
  const Line line = line_from_klein(x);
  const IntMatrix4 m = lift(g);
  return klein_from_plucker(plucker_from_points(transform_point(m, line.first()), transform_point(m, line.second())));
}

LineCoords involution(const LineCoords& x) {
  for (const auto& c : x) {
    if (c.is_zero()) throw std::invalid_argument("involution needs all Klein coordinates nonzero");
  }
  // Multiply (-1/x0, 1/x1, ..., 1/x5) by x0 x1 ... x5.
  LineCoords out;
  for (int i = 0; i < 6; ++i) {
    FieldElement p(1);
    for (int j = 0; j < 6; ++j)
      if (j != i) p *= x[j];
    out[i] = i == 0 ? -p : p;
  }
  return normalized(out);
}

FieldElement nieto_line_condition(const LineCoords& x) {
  FieldElement s(0);
  for (int i = 0; i < 6; ++i) {
    FieldElement p(1);
    for (int j = 0; j < 6; ++j)
      if (j != i) p *= x[j] * x[j];
    s += p;
  }
  return s;
}

bool line_on_surface(const Line& line, const MPoly& f) { return f.substitute(line.parameterization()).is_zero(); }

FermatLines fermat_lines() {
  FermatLines out;
  out.tower = Tower::gaussian()->extend(FieldElement(2));
  const FieldElement i = FieldElement::imaginary_unit();
  const FieldElement sqrt2 = FieldElement::generator(out.tower);
  const FieldElement zeta = sqrt2 * FieldElement(Rational(1, 2)) * (FieldElement(1) + i);
  std::vector<FieldElement> roots;  // the four solutions of a^4 = -1
  FieldElement z = zeta;
  for (int k = 0; k < 4; ++k) {
    roots.push_back(z);
    z = z * zeta * zeta;
  }
  // Coordinate pairings {a,b | c,d}: lines e_a + alpha e_b, e_c + beta e_d.
  const std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& pr : pairings)
    for (const auto& alpha : roots)
      for (const auto& beta : roots) {
        Point a{FieldElement(0), FieldElement(0), FieldElement(0), FieldElement(0)};
        Point b = a;
        a[pr[0]] = FieldElement(1);
        a[pr[1]] = alpha;
        b[pr[2]] = FieldElement(1);
        b[pr[3]] = beta;
        out.lines.push_back(Line::through(a, b));
      }
  const std::size_t n = out.lines.size();
  out.gram.assign(n, std::vector<long>(n, 0));
  Matrix<Rational> g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      out.gram[r][c] = r == c ? -2 : (lines_meet(out.lines[r], out.lines[c]) ? 1 : 0);
      g(r, c) = out.gram[r][c];
    }
  out.rank = matrix_rank(g);
  return out;
}

}  // namespace hq
