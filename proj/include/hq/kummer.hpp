#pragma once

// Kummer members of the family: the invariant quartic singular at a chosen
// point, its 16 nodes and 16 tropes, the trope conics, the splitting of trope
// sections into conic pairs along a line through a Segre node, and fixed point
// counts on smooth members.

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "hq/family.hpp"
#include "hq/heisgroup.hpp"

namespace hq {

/// The gradient system at p has no unique solution (p lies on a fix line).
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction met a degenerate case (orbit collapse, failed square,
/// tangency, ...). The message says which.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique u with F_u singular at the rational point p, normalized.
ParamU kummer_param_at(const Point& p);

struct KummerSeed {
  Point node;                       // normalized
  ParamU param;
  MPoly quartic;                    // F_param
  std::vector<Point> nodes;         // H-orbit of node, indexed by label
  std::vector<PlaneForm> tropes;    // H-orbit of the plane with the node's coordinates
  std::vector<std::vector<bool>> incidence;  // incidence[t][n]: trope t contains node n
};

/// Throws SingularSystemError or DegenerateError.
KummerSeed build_seed(const Point& p);

/// Gradient of f at p.
std::array<FieldElement, 4> gradient_at(const MPoly& f, const Point& p);

struct TropeConic {
  PlaneForm plane;
  FieldElement scale;          // F|_T = scale * conic^2
  MPoly conic;                 // ternary quadratic form in the plane variables, monic
  std::vector<int> nodes_on;   // labels of the incident nodes
};

/// Throws DegenerateError if the restriction is not a square.
TropeConic trope_square(const KummerSeed& seed, int trope);

/// Coordinates of p in the plane's parameterization (drop the pivot).
std::array<FieldElement, 3> plane_coordinates(const PlaneForm& plane, const Point& p);

struct ThirdIntersection {
  ParamU point;
  MPoly cubic;             // sum (q_i + t u_i)^3 as a polynomial in t
  bool double_root_at_q;   // t^2 divides the cubic
};

/// The third intersection of the line through u and the node q with the
/// Segre cubic. Throws std::invalid_argument if q is not a node or u lies on
/// the cubic; DegenerateError if the line meets the cubic only at q.
ThirdIntersection third_intersection(const ParamU& u, const ParamU& q);

struct ConicPair {
  int trope = 0;
  PlaneForm plane;
  FieldElement scale;      // F_u|_T = scale * first * second
  MPoly first, second;     // G - mu Q and G + mu Q
  Rational mu_squared;
  FieldElement mu;
};

struct ConicSplitting {
  ParamU u;
  Rational alpha, beta;    // F_u = alpha F_k + beta F_q
  std::vector<ConicPair> pairs;
  TowerPtr tower;          // common coefficient tower of all conics
};

/// Splits every trope section of X_u into two conics. u must lie on the line
/// through the seed parameter and the Segre node q (not at either end).
ConicSplitting split_trope_conics(const ParamU& u, const KummerSeed& seed, const ParamU& q);

/// u = seed parameter + t q for t = start, start+1, ... until X_u is smooth
/// and all 32 conics are smooth. Throws DegenerateError after `attempts` tries.
ConicSplitting construct_conics(const KummerSeed& seed, const ParamU& q, long start = 1, int attempts = 50);

struct FixedPointCount {
  GroupLabel owner;
  std::array<int, 2> per_line{};   // distinct points on each fix line
  std::array<MPoly, 2> restrictions{MPoly(2), MPoly(2)};  // binary quartics
  int total() const { return per_line[0] + per_line[1]; }
};

/// Points of X_u on the two fix lines of g. Throws std::invalid_argument if
/// X_u is singular or g is the identity, DegenerateError if X_u contains or
/// is tangent to a fix line.
FixedPointCount fixed_points_count(const ParamU& u, GroupLabel g);

struct MukaiSummary {
  std::vector<FixedPointCount> counts;  // 15 nonidentity elements
  Rational average;                     // (24 + sum) / 16
  Rational invariant_rank;              // average - 2
};
MukaiSummary mukai_summary(const ParamU& u);

}  // namespace hq
