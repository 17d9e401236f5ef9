#pragma once

// Exact coefficient arithmetic: GMP rationals and towers of quadratic
// extensions Q(sqrt(d1))(sqrt(d2))...

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "n/d" or "-n/d". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form (GMP's two-argument constructor does not reduce).
Rational make_rational(const Integer& num, const Integer& den);

/// Always "num/den", including "n/1".
std::string rational_string(const Rational& q);

std::optional<Rational> rational_sqrt(const Rational& q);

/// Returns s with n = s * r^2 and s free of prime squares found by trial
/// division (primes up to `trial_limit`). The sign of n is kept in s.
Integer squarefree_kernel(const Integer& n, unsigned long trial_limit = 1000000);

class Tower;
class FieldElement;
using TowerPtr = std::shared_ptr<const Tower>;

/// A tower Q = K_0 ⊂ K_1 ⊂ ... ⊂ K_h with K_j = K_{j-1}(g_j), g_j^2 = d_j.
/// Elements of K_h are stored as 2^h rational coordinates in the basis of
/// power products g_1^{e_1}...g_h^{e_h}, index = sum e_j 2^{j-1}.
class Tower : public std::enable_shared_from_this<Tower> {
 public:
  static TowerPtr rationals();
  /// Q(i), i.e. Q adjoined a square root of -1.
  static TowerPtr gaussian();

  /// Adjoins a square root of `radicand`, which must live in this tower (or a
  /// prefix of it) and must not be a square here. Throws std::domain_error
  /// otherwise.
  TowerPtr extend(const FieldElement& radicand) const;

  std::size_t height() const { return height_; }
  std::size_t dimension() const { return std::size_t{1} << height_; }
  const TowerPtr& parent() const { return parent_; }
  /// Coordinates of d_h over the parent tower (empty for Q).
  const std::vector<Rational>& radicand_coords() const { return radicand_; }
  FieldElement radicand() const;

  /// Prefix of this tower with the given height.
  TowerPtr truncated(std::size_t height) const;
  /// True if `other` is a prefix of (or equal to) this tower.
  bool extends(const Tower& other) const;
  bool same_as(const Tower& other) const;

  /// Radicands d_1..d_h, each as coordinates over its own base.
  std::vector<std::vector<Rational>> radicand_chain() const;
  std::string describe() const;

  Tower(TowerPtr parent, std::vector<Rational> radicand);

 private:
  TowerPtr parent_;
  std::vector<Rational> radicand_;
  std::size_t height_ = 0;
};

/// Element of a quadratic tower. Values are immutable in spirit: every
/// operation returns a new element, promoting operands to the larger tower
/// when one tower is a prefix of the other.
class FieldElement {
 public:
  FieldElement();
  FieldElement(long value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Integer& value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)
  FieldElement(TowerPtr tower, std::vector<Rational> coords);

  /// The top generator g_h of `tower` (height >= 1).
  static FieldElement generator(const TowerPtr& tower);
  /// i in Q(i).
  static FieldElement imaginary_unit();

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws std::domain_error if the element is not in Q.
  Rational to_rational() const;

  FieldElement lifted(const TowerPtr& target) const;
  /// Throws std::domain_error on zero.
  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical total order: coordinates compared lexicographically after
  /// lifting to a common tower. Not compatible with the field structure.
  int compare(const FieldElement& other) const;

  std::string to_string() const;

 private:
  TowerPtr tower_;
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Smallest tower containing both (one must extend the other).
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

/// r with r^2 = a inside a's tower, if it exists.
std::optional<FieldElement> sqrt_in_field(const FieldElement& a);

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

}  // namespace hq
