#pragma once

// Pluecker and Klein coordinates of lines in P^3, the sign action of H on
// Klein coordinates, the involution exchanging the two line orbits on Nieto
// quartics, and the 48 lines on the Fermat quartic.

#include <array>
#include <vector>

#include "hq/heisgroup.hpp"
#include "hq/mpoly.hpp"
#include "hq/projective.hpp"

namespace hq {

/// Six homogeneous line coordinates. Pluecker order (01,02,03,12,13,23).
using LineCoords = std::array<FieldElement, 6>;

/// p_ij = a_i b_j - a_j b_i. Throws std::invalid_argument for dependent points.
LineCoords plucker_from_points(const Point& a, const Point& b);
LineCoords plucker_of(const Line& line);
/// p01 p23 - p02 p13 + p03 p12
FieldElement plucker_relation(const LineCoords& p);

LineCoords klein_from_plucker(const LineCoords& p);
LineCoords plucker_from_klein(const LineCoords& x);
LineCoords klein_of(const Line& line);
/// The line with the given Pluecker coordinates. Throws std::invalid_argument
/// if they do not satisfy the Pluecker relation or vanish.
Line line_from_plucker(const LineCoords& p);
Line line_from_klein(const LineCoords& x);

/// First nonzero coordinate scaled to 1. Throws on the zero vector.
LineCoords normalized(const LineCoords& x);
bool same_line_coords(const LineCoords& a, const LineCoords& b);
std::string coords_string(const LineCoords& x);

FieldElement klein_quadric(const LineCoords& x);                          // sum x_i^2
FieldElement klein_pairing(const LineCoords& x, const LineCoords& y);     // sum x_i y_i
bool coplanar(const LineCoords& x, const LineCoords& y);

using SignCharacter = std::array<int, 6>;
/// Product of the table rows of the generators occurring in g.
SignCharacter sign_character(GroupLabel g);
SignCharacter generator_signs(Generator g);
LineCoords apply_signs(const SignCharacter& eps, const LineCoords& x);
/// Klein coordinates of the line obtained by moving two spanning points by lift(g).
LineCoords transport(GroupLabel g, const LineCoords& x);

/// (-1/x0, 1/x1, ..., 1/x5) cleared of denominators and normalized. Throws
/// std::invalid_argument if some coordinate vanishes.
LineCoords involution(const LineCoords& x);
/// sum_i prod_{j != i} x_j^2
FieldElement nieto_line_condition(const LineCoords& x);

/// F vanishes identically on the line.
bool line_on_surface(const Line& line, const MPoly& f);

struct FermatLines {
  std::vector<Line> lines;
  std::vector<std::vector<long>> gram;  // -2 diagonal, 1 coplanar, 0 skew
  std::size_t rank = 0;
  TowerPtr tower;                       // Q(i)(sqrt 2)
};
FermatLines fermat_lines();

}  // namespace hq
