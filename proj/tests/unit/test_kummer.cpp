#include <doctest.h>

#include "hq/kummer.hpp"
#include "support.hpp"

using namespace hq;

namespace {

bool singular_at(const MPoly& f, const Point& p) {
  for (int k = 0; k < 4; ++k)
    if (!f.derivative(k).evaluate(p).is_zero()) return false;
  return true;
}

bool on_fix_line(const Point& p) {
  for (const auto& fl : all_fix_lines())
    if (fl.line.contains(p)) return true;
  return false;
}

bool collinear(const ParamU& a, const ParamU& b, const ParamU& c) {
  Matrix<Rational> m(3, 6);
  for (int k = 0; k < 6; ++k) {
    m(0, k) = a[k];
    m(1, k) = b[k];
    m(2, k) = c[k];
  }
  return matrix_rank(m) <= 2;
}

}  // namespace

TEST_CASE("seed parameter makes the quartic singular at the point") {
  std::mt19937_64 rng(51);
  int built = 0;
  for (int trial = 0; trial < 40 && built < 12; ++trial) {
    const Point p = hqtest::random_point(rng, 7);
    if (on_fix_line(p)) {
      CHECK_THROWS_AS(kummer_param_at(p), SingularSystemError);
      continue;
    }
    const ParamU u = kummer_param_at(p);
    CHECK(singular_at(quartic_from(u), p));
    CHECK(segre_membership(u));
    CHECK(sgn(singular_discriminant(u)) == 0);
    // Scaling the point does not move the parameter.
    Point q;
    for (int k = 0; k < 4; ++k) q[k] = FieldElement(-3) * p[k];
    CHECK(kummer_param_at(q) == u);
    ++built;
  }
  CHECK(built >= 10);
}

TEST_CASE("points on fix lines have no unique solution") {
  CHECK_THROWS_AS(build_seed(make_point(1, 0, 0, 0)), SingularSystemError);
  CHECK_THROWS_AS(build_seed(make_point(1, 1, 1, 1)), SingularSystemError);
}

TEST_CASE("a seed carries a 16_6 configuration") {
  const KummerSeed seed = build_seed(make_point(2, -1, 5, 3));
  REQUIRE(seed.nodes.size() == 16);
  REQUIRE(seed.tropes.size() == 16);
  for (const auto g : all_labels()) {
    const Point moved = normalized(transform_point(lift(g), seed.node));
    CHECK(same_point(moved, seed.nodes[g.index()]));
    CHECK(singular_at(seed.quartic, seed.nodes[g.index()]));
  }
  for (int t = 0; t < 16; ++t) {
    int on = 0;
    for (int n = 0; n < 16; ++n) {
      const bool contains = pairing(seed.tropes[t], seed.nodes[n]).is_zero();
      CHECK(seed.incidence[t][n] == contains);
      on += contains;
    }
    CHECK(on == 6);
  }
  // Any two nodes share exactly two tropes.
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      int shared = 0;
      for (int t = 0; t < 16; ++t) shared += seed.incidence[t][a] && seed.incidence[t][b];
      CHECK(shared == 2);
    }
}

TEST_CASE("trope sections are double conics through six nodes") {
  const KummerSeed seed = build_seed(make_point(2, -1, 5, 3));
  for (int t = 0; t < 16; ++t) {
    const TropeConic tc = trope_square(seed, t);
    CHECK(tc.scale * tc.conic * tc.conic == restrict_to_plane(seed.quartic, tc.plane));
    CHECK(tc.nodes_on.size() == 6);
    for (const int n : tc.nodes_on) {
      const auto c = plane_coordinates(tc.plane, seed.nodes[n]);
      CHECK(tc.conic.evaluate(c).is_zero());
    }
  }
}

TEST_CASE("third intersection with the Segre cubic") {
  std::mt19937_64 rng(52);
  int done = 0;
  for (int trial = 0; trial < 30 && done < 8; ++trial) {
    const Point p = hqtest::random_point(rng, 6);
    if (on_fix_line(p)) continue;
    const ParamU k = kummer_param_at(p);
    if (k.same_point(q0_param())) continue;
    // Move off the cubic along the line, then come back.
    std::array<Rational, 6> v;
    for (int i = 0; i < 6; ++i) v[i] = k[i] + 2 * q0_param()[i];
    const ParamU u(v);
    if (segre_membership(u)) continue;
    const ThirdIntersection ti = third_intersection(u, q0_param());
    CHECK(ti.double_root_at_q);
    CHECK(segre_membership(ti.point));
    CHECK(collinear(ti.point, u, q0_param()));
    CHECK(ti.point.same_point(k));
    ++done;
  }
  CHECK(done >= 5);
  CHECK_THROWS_AS(third_intersection(ParamU::from_ints({1, 2, 3, 4, 5, -15}), t0_param()), std::invalid_argument);
}

TEST_CASE("conic splitting along a line through a node") {
  const KummerSeed seed = build_seed(make_point(2, -1, 5, 3));
  const ConicSplitting s = construct_conics(seed, q0_param(), 2);
  CHECK(sgn(singular_discriminant(s.u)) != 0);
  CHECK(s.tower->height() <= 1);
  CHECK(s.pairs.size() == 16);
  const MPoly fu = quartic_from(s.u);
  CHECK(fu == FieldElement(s.alpha) * seed.quartic + FieldElement(s.beta) * quartic_from(q0_param()));
  for (const auto& p : s.pairs) {
    CHECK(p.scale * p.first * p.second == restrict_to_plane(fu, p.plane));
    CHECK(p.mu * p.mu == FieldElement(p.mu_squared));
    CHECK_FALSE(proportionality_factor(p.first, p.second).has_value());
  }
}

TEST_CASE("fixed points on smooth members give the Mukai count") {
  std::mt19937_64 rng(53);
  int done = 0;
  for (int trial = 0; trial < 20 && done < 4; ++trial) {
    std::array<long, 6> v;
    long sum = 0;
    for (int k = 0; k < 5; ++k) {
      v[k] = hqtest::small_int(rng, 9);
      sum += v[k];
    }
    v[5] = -sum;
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) continue;
    const ParamU u = ParamU::from_ints(v);
    if (sgn(singular_discriminant(u)) == 0) {
      CHECK_THROWS_AS(mukai_summary(u), std::invalid_argument);
      continue;
    }
    try {
      const MukaiSummary m = mukai_summary(u);
      CHECK(m.counts.size() == 15);
      for (const auto& c : m.counts) CHECK(c.total() == 8);
      CHECK(m.average == Rational(9));
      CHECK(m.invariant_rank == Rational(7));
      ++done;
    } catch (const DegenerateError&) {
      // Tangent to a fix line; try another member.
    }
  }
  CHECK(done >= 2);
  CHECK_THROWS_AS(fixed_points_count(ParamU::from_ints({1, 2, 3, 5, 7, -18}), GroupLabel(0)), std::invalid_argument);
}
