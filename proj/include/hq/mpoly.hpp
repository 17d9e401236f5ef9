#pragma once

// Sparse multivariate polynomials over a quadratic tower, in graded-lex order
// with x0 > x1 > ... (x > y > z > w for quartics in P^3).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hq/field.hpp"
#include "hq/linalg.hpp"

namespace hq {

inline constexpr int kMaxVars = 6;
using Exponent = std::array<std::uint8_t, kMaxVars>;

int total_degree(const Exponent& e);
/// All exponents of the given total degree in nvars variables, leading first.
std::vector<Exponent> monomials_of_degree(int nvars, int degree);

/// Graded-lex, larger first: a map keyed with this comparator iterates from
/// the leading term down.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Exponent, FieldElement, GrlexGreater>;

  explicit MPoly(int nvars = 4);

  static MPoly constant(int nvars, const FieldElement& c);
  static MPoly variable(int nvars, int index);
  static MPoly monomial(int nvars, const Exponent& e, const FieldElement& c);
  /// sum_k coeffs[k] * x_k
  static MPoly linear_form(std::span<const FieldElement> coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  FieldElement coefficient(const Exponent& e) const;

  /// Throws std::domain_error on the zero polynomial.
  const Exponent& leading_exponent() const;
  const FieldElement& leading_coefficient() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const FieldElement& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const FieldElement& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const FieldElement& c) { return a *= c; }
  friend MPoly operator*(const FieldElement& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned k) const;
  MPoly derivative(int var) const;
  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// Replaces x_k by images[k]; all images share one variable count.
  MPoly substitute(std::span<const MPoly> images) const;
  /// Scaled so the leading coefficient is 1 (zero stays zero).
  MPoly normalized() const;
  /// Smallest tower containing every coefficient.
  TowerPtr coefficient_tower() const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

/// Variable names x,y,z,w for 4 variables, s,t,u for plane coordinates, etc.
std::vector<std::string> default_variable_names(int nvars);

/// Exact quotient f / g when g divides f, otherwise nullopt.
std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);

/// c with f = c * g (both nonzero), otherwise nullopt.
std::optional<FieldElement> proportionality_factor(const MPoly& f, const MPoly& g);

using PolyMatrix4 = std::array<std::array<MPoly, 4>, 4>;

/// Determinant by cofactor expansion along the first row. Throws
/// std::invalid_argument when the entries disagree on the variable count.
MPoly poly_det4(const PolyMatrix4& m);
/// Same determinant, expanded along column `col` (independent route).
MPoly poly_det4_by_column(const PolyMatrix4& m, int col);

/// f restricted to the plane sum a_k x_k = 0. The pivot is the first index
/// with a_k != 0; the remaining three coordinates, in increasing order, become
/// the plane variables and x_pivot = -sum_{k != pivot} (a_k / a_pivot) x_k.
MPoly restrict_to_plane(const MPoly& f, std::span<const FieldElement> plane);

struct SquareRoot {
  FieldElement scale;  // f = scale * root^2
  MPoly root;          // leading coefficient 1
};

/// Factorization f = c g^2 with g monic in graded-lex order. Because g is
/// monic its coefficients lie in the coefficient field of f, so no extension
/// is ever needed; nullopt means f is not c times a square.
std::optional<SquareRoot> perfect_square_root(const MPoly& f);

// Univariate helpers (nvars == 1).
std::vector<FieldElement> dense_coefficients(const MPoly& f);  // index = degree
MPoly from_dense(const std::vector<FieldElement>& coeffs);
struct UnivariateDivision {
  MPoly quotient;
  MPoly remainder;
};
UnivariateDivision univ_divide(const MPoly& f, const MPoly& g);
MPoly univ_gcd(const MPoly& f, const MPoly& g);
/// f / gcd(f, f'), monic. Throws std::invalid_argument on zero input.
MPoly univ_squarefree_part(const MPoly& f);

/// 3x3 symmetric Gram matrix of a ternary quadratic form.
Matrix<FieldElement> quadratic_form_matrix(const MPoly& q);
FieldElement det3(const Matrix<FieldElement>& m);

}  // namespace hq
