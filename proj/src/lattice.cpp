#include "hq/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hq {

IntegerMatrix integer_matrix(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) m(r, k) = rows[r][k];
  }
  return m;
}

GramLattice::GramLattice(IntegerMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix must be square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  if (labels_.empty()) {
    for (std::size_t k = 0; k < gram_.rows(); ++k) labels_.push_back("e" + std::to_string(k + 1));
  }
  if (labels_.size() != gram_.rows()) throw std::invalid_argument("label count does not match rank");
}

GramLattice GramLattice::negated() const {
  IntegerMatrix n = gram_;
  for (std::size_t r = 0; r < n.rows(); ++r)
    for (std::size_t c = 0; c < n.cols(); ++c) n(r, c) = -n(r, c);
  return GramLattice(n, labels_);
}

GramLattice lambda15() {
  static const std::vector<std::vector<long>> rows{
      {4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},  {-2, 4, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
      {0, -2, 4, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 1, 1},  {0, 2, 0, 4, 2, 2, 0, 0, 0, 0, 0, 0, 0, 1, 1},
      {0, 0, 0, 2, 4, 2, 0, 0, 2, 1, 0, 0, 0, 0, 0},   {0, 0, 2, 2, 2, 4, 2, 2, 1, 2, 0, 0, 1, 1, 2},
      {0, 0, 0, 0, 0, 2, 4, 2, 0, 2, 0, 0, 0, -1, 1},  {0, 0, 0, 0, 0, 2, 2, 4, 0, 2, 0, 0, 1, 0, 2},
      {0, 0, 0, 0, 2, 1, 0, 0, 4, 2, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 1, 2, 2, 2, 2, 4, 2, 2, 1, 1, 2},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 2, 2, 1, 1},   {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 4, 1, 2, 2},
      {0, -1, 2, 0, 0, 1, 0, 1, 0, 1, 2, 1, 4, 0, 2},  {1, 0, 1, 1, 0, 1, -1, 0, 0, 1, 1, 2, 0, 4, 2},
      {1, 0, 1, 1, 0, 2, 1, 2, 0, 2, 1, 2, 2, 2, 4}};
  return GramLattice(integer_matrix(rows));
}

Integer det_exact(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? Integer(a(n - 1, n - 1)) : Integer(-a(n - 1, n - 1));
}

std::size_t rank_exact(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

namespace {

Matrix<Rational> to_rational(const IntegerMatrix& m) {
  Matrix<Rational> q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = m(r, c);
  return q;
}

IntegerMatrix congruent(const IntegerMatrix& basis, const IntegerMatrix& gram) {
  return basis * gram * basis.transposed();
}

}  // namespace

Signature signature(const IntegerMatrix& gram) {
  if (gram.rows() != gram.cols() || !gram.is_symmetric()) throw std::invalid_argument("symmetric matrix expected");
  Matrix<Rational> a = to_rational(gram);
  const std::size_t n = a.rows();
  Signature sig;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      // Zero diagonal: replace e_i by e_i + e_j for some a_ij != 0, giving a
      // diagonal entry 2 a_ij.
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (sgn(a(r, c)) != 0) {
            i = r;
            j = c;
            break;
          }
      if (i == n) throw std::invalid_argument("degenerate form has no signature");
      for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      p = i;
    }
    swap_index(p, k);
    const Rational pivot = a(k, k);
    (sgn(pivot) > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Rational f = a(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) a(k, r) = 0;
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = 0;
    // Keep the trailing block symmetric after the row operations.
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) a(c, r) = a(r, c);
  }
  return sig;
}

bool is_even(const IntegerMatrix& gram) {
  for (std::size_t k = 0; k < gram.rows(); ++k)
    if (mpz_odd_p(gram(k, k).get_mpz_t())) return false;
  return true;
}

std::optional<IntegerVector> solve_integral(const IntegerMatrix& gram, const IntegerVector& target) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("square Gram matrix expected");
  if (target.size() != gram.rows()) throw std::invalid_argument("target size mismatch");
  if (sgn(det_exact(gram)) == 0) throw std::invalid_argument("degenerate Gram matrix");
  std::vector<Rational> rhs(target.begin(), target.end());
  const auto x = solve_linear(to_rational(gram), rhs);
  if (!x) return std::nullopt;
  IntegerVector out;
  for (const auto& q : *x) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

Integer inner(const IntegerMatrix& gram, const IntegerVector& x, const IntegerVector& y) {
  Integer s = 0;
  for (std::size_t r = 0; r < gram.rows(); ++r) {
    if (sgn(x[r]) == 0) continue;
    for (std::size_t c = 0; c < gram.cols(); ++c) s += x[r] * gram(r, c) * y[c];
  }
  return s;
}

Sublattice orth_complement(const IntegerMatrix& gram, const IntegerVector& v) {
  const std::size_t n = gram.rows();
  if (v.size() != n) throw std::invalid_argument("vector size mismatch");
  if (std::all_of(v.begin(), v.end(), [](const Integer& z) { return sgn(z) == 0; }))
    throw std::invalid_argument("orthogonal complement of the zero vector");
  IntegerVector c(n, Integer(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) c[r] += gram(r, k) * v[k];
  IntegerMatrix u = IntegerMatrix::identity(n);  // columns transform along with c
  std::size_t pivot = n;
  while (true) {
    pivot = n;
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(c[k]) == 0) continue;
      ++nonzero;
      if (pivot == n || abs(c[k]) < abs(c[pivot])) pivot = k;
    }
    if (nonzero <= 1) break;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == pivot || sgn(c[k]) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), c[k].get_mpz_t(), c[pivot].get_mpz_t());
      c[k] -= q * c[pivot];
      for (std::size_t r = 0; r < n; ++r) u(r, k) -= q * u(r, pivot);
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (k != pivot) keep.push_back(k);
  IntegerMatrix basis(keep.size(), n);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t r = 0; r < n; ++r) basis(i, r) = u(r, keep[i]);
  return Sublattice{basis, congruent(basis, gram)};
}

bool is_saturated(const IntegerMatrix& rows) {
  const std::size_t k = rows.rows(), n = rows.cols();
  if (k > n) return false;
  if (k == 0) return true;
  Integer g = 0;
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    IntegerMatrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = rows(r, cols[c]);
    g = gcd(g, det_exact(minor));
    if (g == 1) return true;
    // Next k-subset of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g == 1;
}

Integer sublattice_index(const IntegerMatrix& ambient_gram, const Matrix<Rational>& rows) {
  const std::size_t n = ambient_gram.rows();
  if (rows.rows() != n || rows.cols() != n) throw std::invalid_argument("sublattice must have full rank");
  IntegerMatrix basis(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (rows(r, c).get_den() != 1) throw std::invalid_argument("sublattice is not contained in the lattice");
      basis(r, c) = rows(r, c).get_num();
    }
  const Integer dm = det_exact(ambient_gram);
  if (sgn(dm) == 0) throw std::invalid_argument("ambient lattice is degenerate");
  const Integer dn = det_exact(congruent(basis, ambient_gram));
  if (sgn(dn) == 0) throw std::invalid_argument("sublattice must have full rank");
  if (!mpz_divisible_p(dn.get_mpz_t(), dm.get_mpz_t())) throw std::logic_error("discriminant ratio is not integral");
  const Integer ratio = dn / dm;
  if (sgn(ratio) < 0 || !mpz_perfect_square_p(ratio.get_mpz_t()))
    throw std::logic_error("discriminant ratio is not a square");
  const Integer index = sqrt(ratio);
  if (abs(det_exact(basis)) != index) throw std::logic_error("index disagrees with the basis determinant");
  return index;
}

std::vector<IntegerVector> short_vectors(const IntegerMatrix& gram, long bound) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n || !gram.is_symmetric()) throw std::invalid_argument("symmetric matrix expected");
  // q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  Matrix<Rational> q = to_rational(gram);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(q(i, i)) <= 0) throw std::invalid_argument("form is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  std::vector<IntegerVector> out;
  if (bound < 0) return out;
  IntegerVector x(n, Integer(0));
  std::vector<long> xs(n, 0);

  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& remaining) {
    const std::size_t i = level - 1;
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (xs[j] != 0) center -= q(i, j) * xs[j];
    const Rational& d = q(i, i);
    auto fits = [&](long v) {
      const Rational t = Rational(v) - center;
      return d * t * t <= remaining;
    };
    const double cd = center.get_d();
    const double radius = std::sqrt(std::max(0.0, Rational(remaining / d).get_d()));
    long lo = static_cast<long>(std::floor(cd - radius)) - 2;
    long hi = static_cast<long>(std::ceil(cd + radius)) + 2;
    while (lo <= hi && !fits(lo)) ++lo;
    while (hi >= lo && !fits(hi)) --hi;
    for (long v = lo; v <= hi; ++v) {
      xs[i] = v;
      const Rational t = Rational(v) - center;
      const Rational rest = remaining - d * t * t;
      if (i == 0) {
        IntegerVector vec(n);
        for (std::size_t k = 0; k < n; ++k) vec[k] = xs[k];
        out.push_back(std::move(vec));
      } else {
        descend(i, rest);
      }
    }
    xs[i] = 0;
  };
  if (n == 0) {
    out.push_back({});
    return out;
  }
  descend(n, Rational(bound));
  return out;
}

std::map<long, std::size_t> norm_counts(const IntegerMatrix& gram, long bound) {
  std::map<long, std::size_t> counts;
  for (const auto& v : short_vectors(gram, bound)) counts[inner(gram, v, v).get_si()] += 1;
  return counts;
}

std::optional<long> minimum_norm(const IntegerMatrix& gram, long limit) {
  for (long b = 1; b <= limit; ++b) {
    const auto counts = norm_counts(gram, b);
    for (const auto& [norm, count] : counts)
      if (norm > 0) return norm;
  }
  return std::nullopt;
}

}  // namespace hq
