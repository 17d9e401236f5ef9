#include <doctest.h>

#include "hq/lattice.hpp"
#include "support.hpp"

using namespace hq;

namespace {

IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (a == b) continue;
    const long k = hqtest::small_int(rng, 2);
    for (std::size_t c = 0; c < n; ++c) u(a, c) += k * u(b, c);
  }
  return u;
}

IntegerMatrix congruent(const IntegerMatrix& g, const IntegerMatrix& u) { return u * g * u.transposed(); }

Matrix<Rational> to_rational(const IntegerMatrix& m) {
  Matrix<Rational> q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
  return q;
}

// Determinant by Gaussian elimination over Q.
Rational rational_det(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

IntegerMatrix hyperbolic() { return integer_matrix({{0, 1}, {1, 0}}); }

// E8 Cartan matrix, positive definite, det 1.
IntegerMatrix e8() {
  IntegerMatrix g(8, 8);
  for (std::size_t k = 0; k < 8; ++k) g(k, k) = 2;
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
  for (const auto& [a, b] : edges) g(a, b) = g(b, a) = -1;
  return g;
}

// Brute-force count of vectors with coordinates in [-r, r] and norm <= bound.
std::map<long, std::size_t> brute_counts(const IntegerMatrix& g, long bound, long r) {
  const std::size_t n = g.rows();
  std::map<long, std::size_t> out;
  IntegerVector x(n, Integer(-r));
  while (true) {
    const long norm = inner(g, x, x).get_si();
    if (norm <= bound) out[norm] += 1;
    std::size_t k = 0;
    while (k < n && x[k] == r) x[k++] = -r;
    if (k == n) break;
    x[k] += 1;
  }
  return out;
}

}  // namespace

TEST_CASE("small examples") {
  CHECK(det_exact(hyperbolic()) == -1);
  CHECK(signature(hyperbolic()) == Signature{1, 1});
  CHECK(is_even(hyperbolic()));
  CHECK_FALSE(is_even(integer_matrix({{1, 0}, {0, 2}})));
  CHECK(det_exact(e8()) == 1);
  CHECK(signature(e8()) == Signature{8, 0});
  CHECK(rank_exact(integer_matrix({{1, 2}, {2, 4}})) == 1);
  CHECK_THROWS_AS(signature(integer_matrix({{1, 1}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice(integer_matrix({{1, 2}, {3, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice(integer_matrix({{1, 0}, {0, 1}}), {"a"}), std::invalid_argument);
  const GramLattice l(integer_matrix({{2, 1}, {1, 2}}));
  CHECK(l.labels() == std::vector<std::string>{"e1", "e2"});
  CHECK(l.negated().gram()(0, 1) == -1);
}

TEST_CASE("laminated lattice fixture") {
  const GramLattice lam = lambda15();
  CHECK(lam.rank() == 15);
  CHECK(det_exact(lam.gram()) == 512);
  CHECK(is_even(lam.gram()));
  CHECK(signature(lam.gram()) == Signature{15, 0});
}

TEST_CASE("fraction-free and rational elimination agree") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    IntegerMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = hqtest::small_int(rng, 5);
    if (trial % 5 == 0 && n > 1)
      for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = m(0, c) * 2;
    CHECK(Rational(det_exact(m)) == rational_det(to_rational(m)));
    CHECK(rank_exact(m) == matrix_rank(to_rational(m)));
  }
}

TEST_CASE("congruence invariants under random unimodular changes") {
  std::mt19937_64 rng(72);
  const std::vector<IntegerMatrix> grams{e8(), hyperbolic(), lambda15().gram(),
                                         integer_matrix({{2, 1, 0}, {1, -4, 3}, {0, 3, 6}})};
  for (const auto& g : grams) {
    for (int trial = 0; trial < 3; ++trial) {
      const IntegerMatrix u = random_unimodular(rng, g.rows());
      CHECK(abs(det_exact(u)) == 1);
      const IntegerMatrix h = congruent(g, u);
      CHECK(det_exact(h) == det_exact(g));
      CHECK(signature(h) == signature(g));
      CHECK(is_even(h) == is_even(g));
    }
  }
}

TEST_CASE("integral solutions") {
  const IntegerMatrix g = integer_matrix({{2, 1}, {1, 2}});
  const auto x = solve_integral(g, {Integer(3), Integer(3)});
  REQUIRE(x);
  CHECK(*x == IntegerVector{Integer(1), Integer(1)});
  CHECK_FALSE(solve_integral(g, {Integer(1), Integer(0)}).has_value());
  CHECK_THROWS_AS(solve_integral(integer_matrix({{1, 1}, {1, 1}}), {Integer(1), Integer(1)}), std::invalid_argument);
}

TEST_CASE("orthogonal complements are saturated and orthogonal") {
  std::mt19937_64 rng(73);
  const IntegerMatrix g = e8();
  for (int trial = 0; trial < 20; ++trial) {
    IntegerVector v(8);
    bool nonzero = false;
    for (auto& c : v) {
      c = hqtest::small_int(rng, 3);
      nonzero = nonzero || sgn(c) != 0;
    }
    if (!nonzero) continue;
    const Sublattice s = orth_complement(g, v);
    CHECK(s.basis.rows() == 7);
    CHECK(is_saturated(s.basis));
    for (std::size_t r = 0; r < 7; ++r) CHECK(sgn(inner(g, s.basis.row(r), v)) == 0);
    CHECK(s.gram == s.basis * g * s.basis.transposed());
    CHECK(signature(s.gram) == Signature{7, 0});
  }
  CHECK_FALSE(is_saturated(integer_matrix({{2, 0}, {0, 1}})));
  CHECK(is_saturated(integer_matrix({{1, 1, 0}})));
}

TEST_CASE("sublattice index") {
  const IntegerMatrix g = e8();
  // Doubling one basis vector gives index 2; a unimodular change gives index 1.
  Matrix<Rational> rows = to_rational(IntegerMatrix::identity(8));
  rows(3, 3) = 2;
  CHECK(sublattice_index(g, rows) == 2);
  std::mt19937_64 rng(74);
  CHECK(sublattice_index(g, to_rational(random_unimodular(rng, 8))) == 1);
  Matrix<Rational> half = to_rational(IntegerMatrix::identity(8));
  half(0, 0) = make_rational(1, 2);
  CHECK_THROWS_AS(sublattice_index(g, half), std::invalid_argument);
}

TEST_CASE("short vectors match brute force") {
  // A2, D4 and E8 have 6, 24 and 240 roots.
  const IntegerMatrix a2 = integer_matrix({{2, -1}, {-1, 2}});
  const IntegerMatrix d4 = integer_matrix({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  CHECK(norm_counts(a2, 2).at(2) == 6);
  CHECK(norm_counts(d4, 2).at(2) == 24);
  CHECK(norm_counts(e8(), 2).at(2) == 240);
  CHECK(norm_counts(e8(), 4).at(4) == 2160);
  CHECK(minimum_norm(e8()) == 2);
  CHECK(minimum_norm(integer_matrix({{6, 3}, {3, 8}})) == 6);

  for (const auto& g : {a2, d4, integer_matrix({{4, 1, 0}, {1, 6, 2}, {0, 2, 10}})}) {
    const auto fast = norm_counts(g, 12);
    const auto slow = brute_counts(g, 12, 5);
    CHECK(fast == slow);
    for (const auto& v : short_vectors(g, 12)) CHECK(inner(g, v, v) <= 12);
  }
  CHECK_THROWS_AS(short_vectors(hyperbolic(), 2), std::invalid_argument);
}
