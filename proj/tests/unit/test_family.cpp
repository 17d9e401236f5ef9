#include <doctest.h>

#include "hq/family.hpp"
#include "hq/heisgroup.hpp"
#include "support.hpp"

using namespace hq;

namespace {

ParamU random_u(std::mt19937_64& rng) {
  while (true) {
    std::array<Rational, 6> v;
    Rational sum = 0;
    for (int k = 0; k < 5; ++k) {
      v[k] = Rational(hqtest::small_int(rng, 6));
      sum += v[k];
    }
    v[5] = -sum;
    if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; })) return ParamU(v);
  }
}

MPoly var(int k) { return MPoly::variable(4, k); }

}  // namespace

TEST_CASE("parameter validation and parsing") {
  CHECK_THROWS_AS(ParamU::from_ints({1, 0, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ParamU::from_ints({0, 0, 0, 0, 0, 0}), std::invalid_argument);
  CHECK(parse_param_u("1,1,1,-1,-1,-1") == q0_param());
  CHECK(parse_param_u("1/2,-1/2,0,0,0,0").same_point(t0_param()));
  CHECK_THROWS_AS(parse_param_u("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_param_u("1,a,0,0,0,-1"), std::invalid_argument);
  CHECK(ParamU::from_ints({-2, 2, 0, 0, 0, 0}).normalized() == t0_param());
}

TEST_CASE("basis identities") {
  const auto g = g_basis();
  const auto t = t_basis();
  CHECK(t[4] - t[5] == FieldElement(4) * g[4]);
  CHECK(t[0] - t[1] == FieldElement(-2) * g[2] - FieldElement(2) * g[3]);
  CHECK(quartic_from(t0_param()) == FieldElement(-2) * (g[2] + g[3]));
  // The six t's sum to zero, which is why u is taken with sum zero.
  MPoly sum(4);
  for (const auto& f : t) sum += f;
  CHECK(sum.is_zero());
  const MPoly x = var(0), y = var(1), z = var(2), w = var(3);
  CHECK(g[0] == x.pow(4) + y.pow(4) + z.pow(4) + w.pow(4));
  CHECK(g[4] == FieldElement(4) * x * y * z * w);
  CHECK(quartic_from(ParamU::from_ints({1, 1, 1, 1, -2, -2})) == FieldElement(4) * g[0]);
}

TEST_CASE("the two coordinate systems describe the same quartics") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const ParamU u = random_u(rng);
    const ParamABCDE l = u_to_abcde(u);
    CHECK(quartic_from(u) == quartic_from(l));
    CHECK(abcde_to_u(l).same_point(u));
    const auto coords = abcde_of(quartic_from(u));
    REQUIRE(coords);
    for (int k = 0; k < 5; ++k) CHECK((*coords)[k] == FieldElement(l[k]));
    CHECK(is_h22_invariant(quartic_from(u)));
  }
  CHECK_FALSE(abcde_of(var(0).pow(3) * var(1)).has_value());
  CHECK_FALSE(is_h22_invariant(var(0).pow(3) * var(1)));
}

TEST_CASE("S6 orbits") {
  CHECK(s6_orbit(q0_param()).size() == 10);
  CHECK(s6_orbit(t0_param()).size() == 15);
  CHECK(all_permutations6().size() == 720);
  CHECK_THROWS_AS(s6_action({0, 0, 1, 2, 3, 4}, q0_param()), std::invalid_argument);
  const ParamU u = ParamU::from_ints({1, 2, 3, 4, 5, -15});
  const ParamU v = s6_action({1, 2, 3, 4, 5, 0}, u);
  CHECK(v == ParamU::from_ints({-15, 1, 2, 3, 4, 5}));
}

TEST_CASE("discriminant examples") {
  CHECK(sgn(singular_discriminant(q0_param())) == 0);
  CHECK(sgn(singular_discriminant(t0_param())) == 0);
  // Fermat: sum of cubes -12 and pair sums 2 (six times), -1 (eight times), -4 once.
  const ParamU fermat = ParamU::from_ints({1, 1, 1, 1, -2, -2});
  CHECK(singular_discriminant(fermat) == Rational(-12 * 64 * -4));
  CHECK(segre_value(fermat) == Rational(-12));
  CHECK(is_segre_singular(q0_param()));
  CHECK(segre_membership(t0_param()));
  CHECK_FALSE(is_segre_singular(t0_param()));
}

TEST_CASE("discriminant and hypersurfaces are S6-invariant") {
  std::mt19937_64 rng(42);
  const auto perms = all_permutations6();
  for (int trial = 0; trial < 30; ++trial) {
    const ParamU u = random_u(rng);
    const auto& sigma = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
    const ParamU v = s6_action(sigma, u);
    CHECK(singular_discriminant(v) == singular_discriminant(u));
    CHECK(segre_value(v) == segre_value(u));
    CHECK(nieto_value(v) == nieto_value(u));
  }
}

TEST_CASE("nieto value is the cleared sum of reciprocals") {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    const ParamU u = random_u(rng);
    Rational prod = 1, recip = 0;
    bool zero = false;
    for (const auto& q : u.values()) {
      if (sgn(q) == 0) zero = true;
      else {
        prod *= q;
        recip += 1 / q;
      }
    }
    if (zero) continue;
    CHECK(nieto_value(u) == Rational(prod * recip));
    ++checked;
  }
  CHECK(checked > 10);
  // (1,-1,1,-1,1,-1): sum of reciprocals vanishes.
  const ParamU alt = ParamU::from_ints({1, -1, 1, -1, 1, -1});
  CHECK(nieto_membership(alt));
}

TEST_CASE("igusa relation vanishes on fresh points") {
  const IgusaRelation rel = igusa_relation();
  CHECK(rel.kernel_dimension == 1);
  CHECK(rel.monomials.size() == 70);
  const MPoly r = rel.polynomial();
  CHECK(r.total_degree() == 4);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Point p = hqtest::random_point(rng, 20);
    const auto image = igusa_map(p);
    CHECK(r.evaluate(image).is_zero());
  }
  CHECK_THROWS_AS(igusa_map(make_point(0, 0, 0, 0)), std::logic_error);
}

TEST_CASE("hessians") {
  const MPoly x = var(0), y = var(1), z = var(2), w = var(3);
  const auto g = g_basis();
  CHECK(hessian_determinant(g[0]) == FieldElement(20736) * (x * y * z * w).pow(2));

  std::mt19937_64 rng(44);
  const ParamU u = random_u(rng);
  CHECK(is_h22_invariant(hessian_determinant(quartic_from(u))));

  const MPoly f = hqtest::random_form(rng, 4, 4);
  for (const auto label : all_labels()) {
    const IntMatrix4 t = lift(label);
    const PolyMatrix4 lhs = hessian_matrix(compose(f, t));
    const PolyMatrix4 rhs = transported_hessian(hessian_matrix(f), t);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) CHECK(lhs[r][c] == rhs[r][c]);
  }
}

TEST_CASE("matching parameters and sums of squares") {
  const ParamU u = ParamU::from_ints({3, -1, 2, 0, -5, 1});
  const std::vector<ParamU> candidates{q0_param(), t0_param(), u};
  const auto m = match_parameter(FieldElement(make_rational(-7, 3)) * quartic_from(u), candidates);
  REQUIRE(m);
  CHECK(*m == u);
  CHECK_FALSE(match_parameter(var(0).pow(4), candidates).has_value());

  const MPoly a = var(0) * var(1), b = var(2) * var(2) - var(3) * var(3);
  const auto f = split_sum_of_squares(a, b);
  CHECK(f[0] * f[1] == a * a + b * b);
}
