#pragma once

// Integral lattices given by Gram matrices: fraction-free determinants,
// signatures, integral solving, orthogonal complements, sublattice indices
// and short vector enumeration.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hq/field.hpp"
#include "hq/linalg.hpp"

namespace hq {

using IntegerMatrix = Matrix<Integer>;
using IntegerVector = std::vector<Integer>;

IntegerMatrix integer_matrix(const std::vector<std::vector<long>>& rows);

class GramLattice {
 public:
  /// Throws std::invalid_argument for a non-square or non-symmetric matrix or a
  /// label count that does not match.
  explicit GramLattice(IntegerMatrix gram, std::vector<std::string> labels = {});
  std::size_t rank() const { return gram_.rows(); }
  const IntegerMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  GramLattice negated() const;

 private:
  IntegerMatrix gram_;
  std::vector<std::string> labels_;
};

/// The fixed 15x15 Gram matrix of the laminated lattice of rank 15.
GramLattice lambda15();

/// Determinant by Bareiss fraction-free elimination.
Integer det_exact(const IntegerMatrix& m);
/// Rank by fraction-free elimination.
std::size_t rank_exact(const IntegerMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative;
  }
};
/// Congruence diagonalization over Q. Throws std::invalid_argument for a
/// degenerate or non-symmetric matrix.
Signature signature(const IntegerMatrix& gram);
bool is_even(const IntegerMatrix& gram);

/// x with gram * x = target when such an integral x exists.
std::optional<IntegerVector> solve_integral(const IntegerMatrix& gram, const IntegerVector& target);

Integer inner(const IntegerMatrix& gram, const IntegerVector& x, const IntegerVector& y);

struct Sublattice {
  IntegerMatrix basis;   // rows, in ambient coordinates
  IntegerMatrix gram;    // basis * G * basis^t
};

/// Basis of {x : x^t G v = 0}, found by unimodular column reduction of the
/// row vector (G v)^t. At each step the entry of smallest absolute value
/// (lowest index on ties) reduces all others; the surviving pivot column is
/// dropped and the other columns of the transformation form the basis.
Sublattice orth_complement(const IntegerMatrix& gram, const IntegerVector& v);

/// True if the rows span a primitive sublattice of Z^n (gcd of maximal minors is 1).
bool is_saturated(const IntegerMatrix& rows);

/// Index of the full-rank sublattice spanned by `rows` (rational coordinates
/// in the ambient basis). Containment requires integral rows; the index is
/// the square root of disc(N)/disc(M) and is cross-checked against |det rows|.
/// Throws std::invalid_argument when not contained or not full rank and
/// std::logic_error when the discriminant ratio is not a square.
Integer sublattice_index(const IntegerMatrix& ambient_gram, const Matrix<Rational>& rows);

/// All x with x^t G x <= bound (including 0) for positive definite G, by
/// Fincke-Pohst enumeration on the exact rational LDL^t decomposition.
/// Throws std::invalid_argument for a form that is not positive definite.
std::vector<IntegerVector> short_vectors(const IntegerMatrix& gram, long bound);
/// Number of vectors of each norm up to bound.
std::map<long, std::size_t> norm_counts(const IntegerMatrix& gram, long bound);
/// Smallest nonzero norm, searching bounds up to `limit`.
std::optional<long> minimum_norm(const IntegerMatrix& gram, long limit = 64);

}  // namespace hq
