#pragma once

// The five-dimensional space of H22-invariant quartics: the g- and t-bases,
// the (A..E) <-> u coordinate changes, the S6 action on U, the singularity
// discriminant, the Segre cubic and Nieto quintic, the Igusa map and Hessians.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hq/mpoly.hpp"
#include "hq/projective.hpp"

namespace hq {

/// Homogeneous (A,B,C,D,E), not all zero.
class ParamABCDE {
 public:
  explicit ParamABCDE(std::array<Rational, 5> values);
  const Rational& operator[](int k) const { return values_[k]; }
  const std::array<Rational, 5>& values() const { return values_; }
  std::string to_string() const;
  friend bool operator==(const ParamABCDE& a, const ParamABCDE& b) { return a.values_ == b.values_; }

 private:
  std::array<Rational, 5> values_;
};

/// Homogeneous (u0..u5) with sum zero, not all zero.
class ParamU {
 public:
  /// Throws std::invalid_argument if the sum is nonzero or all entries vanish.
  explicit ParamU(std::array<Rational, 6> values);
  static ParamU from_ints(std::array<long, 6> values);
  const Rational& operator[](int k) const { return values_[k]; }
  const std::array<Rational, 6>& values() const { return values_; }
  /// First nonzero coordinate scaled to 1.
  ParamU normalized() const;
  bool same_point(const ParamU& other) const { return normalized() == other.normalized(); }
  std::string to_string() const;
  friend bool operator==(const ParamU& a, const ParamU& b) { return a.values_ == b.values_; }
  friend bool operator<(const ParamU& a, const ParamU& b) { return a.values_ < b.values_; }

 private:
  std::array<Rational, 6> values_;
};

/// Parses "a,b,c,d,e,f" (rationals allowed). Throws std::invalid_argument.
ParamU parse_param_u(const std::string& text);

/// The Segre node (1,1,1,-1,-1,-1) and tetrahedron point (1,-1,0,0,0,0).
ParamU q0_param();
ParamU t0_param();

std::array<MPoly, 5> g_basis();
std::array<MPoly, 6> t_basis();

ParamABCDE u_to_abcde(const ParamU& u);
ParamU abcde_to_u(const ParamABCDE& lambda);

/// F_lambda = sum lambda_k g_k and F_u = sum u_k t_k.
MPoly quartic_from(const ParamABCDE& lambda);
MPoly quartic_from(const ParamU& u);
/// Coordinates of f in the g-basis, or nullopt if f is not an invariant quartic.
std::optional<std::array<FieldElement, 5>> abcde_of(const MPoly& f);

using Permutation6 = std::array<int, 6>;
/// (sigma u)_{sigma(i)} = u_i. Throws std::invalid_argument for a non-permutation.
ParamU s6_action(const Permutation6& sigma, const ParamU& u);
/// Normalized, sorted, duplicate-free orbit.
std::vector<ParamU> s6_orbit(const ParamU& u);
std::vector<Permutation6> all_permutations6();

/// (sum u_i^3) * prod_{i<j} (u_i + u_j).
Rational singular_discriminant(const ParamU& u);

Rational segre_value(const ParamU& u);                 // sum u_i^3
bool segre_membership(const ParamU& u);
/// Degree-5 cleared form of sum 1/u_i (fifth elementary symmetric function).
Rational nieto_value(const ParamU& u);
bool nieto_membership(const ParamU& u);
/// Singular points of the hypersurfaces inside U: on the hypersurface and with
/// gradient proportional to (1,...,1).
bool is_segre_singular(const ParamU& u);
bool is_nieto_singular(const ParamU& u);

/// (g_0(p),...,g_4(p)). Throws std::logic_error if all vanish.
std::array<FieldElement, 5> igusa_map(const Point& p);

struct IgusaRelation {
  std::vector<Exponent> monomials;         // the 70 degree-4 monomials in 5 variables, grlex
  std::vector<Rational> coefficients;      // kernel vector, first nonzero entry 1
  std::size_t kernel_dimension = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// The relation as a polynomial in 5 variables.
  MPoly polynomial() const;
};
/// Interpolates quartic relations among g_0..g_4 at `samples` random integer
/// points. Coefficients are only filled when the kernel is one-dimensional.
IgusaRelation igusa_relation(std::size_t samples = 80, std::uint64_t seed = 1234567);

PolyMatrix4 hessian_matrix(const MPoly& f);
MPoly hessian_determinant(const MPoly& f);
/// T^t H(T x) T, the Hessian of f o T expressed through the Hessian H of f.
PolyMatrix4 transported_hessian(const PolyMatrix4& h, const IntMatrix4& t);

/// f o g == f for the four generators of H22.
bool is_h22_invariant(const MPoly& f);

/// First candidate u whose F_u is proportional to f.
std::optional<ParamU> match_parameter(const MPoly& f, const std::vector<ParamU>& candidates);

/// 2(a^2 + b^2) = 2(a + i b)(a - i b): the two factors over Q(i).
std::array<MPoly, 2> split_sum_of_squares(const MPoly& a, const MPoly& b);

}  // namespace hq
