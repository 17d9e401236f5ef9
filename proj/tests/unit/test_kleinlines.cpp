#include <doctest.h>

#include "hq/family.hpp"
#include "hq/kleinlines.hpp"
#include "support.hpp"

using namespace hq;

namespace {

Line random_line(std::mt19937_64& rng) {
  while (true) {
    const Point a = hqtest::random_point(rng, 5), b = hqtest::random_point(rng, 5);
    if (matrix_rank(stack_points({a, b})) == 2) return Line::through(a, b);
  }
}

bool all_nonzero(const LineCoords& x) {
  return std::none_of(x.begin(), x.end(), [](const FieldElement& v) { return v.is_zero(); });
}

}  // namespace

TEST_CASE("coordinates of a coordinate line") {
  const Line l = Line::through(make_point(1, 0, 0, 0), make_point(0, 1, 0, 0));
  const LineCoords p = plucker_of(l);
  CHECK(p[0] == FieldElement(1));
  for (int k = 1; k < 6; ++k) CHECK(p[k].is_zero());
  const LineCoords x = klein_of(l);
  const FieldElement i = FieldElement::imaginary_unit();
  CHECK(same_line_coords(x, LineCoords{1, i, 0, 0, 0, 0}));
  CHECK(line_from_klein(x) == l);
  CHECK_THROWS_AS(plucker_from_points(make_point(1, 2, 3, 4), make_point(2, 4, 6, 8)), std::invalid_argument);
  CHECK_THROWS_AS(line_from_plucker(LineCoords{1, 0, 0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(normalized(LineCoords{0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("round trips between points, Pluecker and Klein coordinates") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Line l = random_line(rng);
    const LineCoords p = plucker_of(l);
    CHECK(plucker_relation(p).is_zero());
    const LineCoords x = klein_from_plucker(p);
    CHECK(klein_quadric(x).is_zero());
    const LineCoords back = plucker_from_klein(x);
    for (int k = 0; k < 6; ++k) CHECK(back[k] == p[k]);
    CHECK(line_from_plucker(p) == l);
    CHECK(line_from_klein(x) == l);
  }
}

TEST_CASE("coplanarity agrees with the rank of the spanning points") {
  std::mt19937_64 rng(62);
  int meeting = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Line a = random_line(rng);
    Line b = random_line(rng);
    // Make every third pair meet by sharing a point.
    if (trial % 3 == 0) {
      Point c = hqtest::random_point(rng, 5);
      if (matrix_rank(stack_points({a.first(), c})) == 2) b = Line::through(a.first(), c);
    }
    const bool oracle = matrix_rank(stack_points({a.first(), a.second(), b.first(), b.second()})) <= 3;
    CHECK(coplanar(klein_of(a), klein_of(b)) == oracle);
    CHECK(klein_pairing(klein_of(a), klein_of(b)).is_zero() == oracle);
    meeting += oracle;
  }
  CHECK(meeting >= 30);
}

TEST_CASE("sign characters reproduce the group action on lines") {
  std::mt19937_64 rng(63);
  for (const auto g : all_labels()) {
    for (int trial = 0; trial < 6; ++trial) {
      const Line l = random_line(rng);
      const LineCoords x = klein_of(l);
      // Moving two spanning points by the matrix is the independent route.
      const Line moved = Line::through(transform_point(lift(g), l.first()), transform_point(lift(g), l.second()));
      CHECK(same_line_coords(apply_signs(sign_character(g), x), klein_of(moved)));
      CHECK(same_line_coords(transport(g, x), klein_of(moved)));
    }
  }
  for (const auto g : all_labels())
    for (const auto h : all_labels()) {
      const SignCharacter a = sign_character(g), b = sign_character(h), c = sign_character(g + h);
      for (int k = 0; k < 6; ++k) CHECK(a[k] * b[k] == c[k]);
    }
  // Every nonidentity character is nontrivial.
  for (const auto g : all_labels()) {
    const SignCharacter e = sign_character(g);
    const bool trivial = std::all_of(e.begin(), e.end(), [](int s) { return s == 1; });
    CHECK(trivial == g.is_identity());
  }
}

TEST_CASE("the involution swaps the Klein quadric and the line condition") {
  std::mt19937_64 rng(64);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 25; ++trial) {
    const LineCoords x = klein_of(random_line(rng));
    if (!all_nonzero(x)) continue;
    const LineCoords y = involution(x);
    CHECK(same_line_coords(involution(y), x));
    CHECK(nieto_line_condition(y).is_zero());
    CHECK(klein_quadric(y).is_zero() == nieto_line_condition(x).is_zero());
    ++done;
  }
  CHECK(done >= 20);
  CHECK_THROWS_AS(involution(LineCoords{1, 0, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("lines on surfaces") {
  const MPoly x = MPoly::variable(4, 0), y = MPoly::variable(4, 1), z = MPoly::variable(4, 2),
              w = MPoly::variable(4, 3);
  const MPoly f = x * x * x * x + y * z * w * w;
  CHECK(line_on_surface(Line::through(make_point(0, 1, 0, 0), make_point(0, 0, 0, 1)), f));
  CHECK_FALSE(line_on_surface(Line::through(make_point(1, 0, 0, 0), make_point(0, 1, 0, 0)), f));
  CHECK_FALSE(line_on_surface(Line::through(make_point(0, 1, 0, 0), make_point(0, 0, 1, 1)), f));
}

TEST_CASE("the Fermat quartic has 48 lines with Gram rank 20") {
  const FermatLines fl = fermat_lines();
  REQUIRE(fl.lines.size() == 48);
  CHECK(fl.rank == 20);
  CHECK(fl.tower->describe() == "Q(sqrt(-1))(sqrt(2))");
  for (const auto& l : fl.lines) CHECK(line_on_surface(l, g_basis()[0]));
  for (std::size_t a = 0; a < 48; ++a) {
    CHECK(fl.gram[a][a] == -2);
    int meets = 0;
    for (std::size_t b = 0; b < 48; ++b) {
      CHECK(fl.gram[a][b] == fl.gram[b][a]);
      if (a == b) continue;
      CHECK(fl.gram[a][b] == (lines_meet(fl.lines[a], fl.lines[b]) ? 1 : 0));
      meets += fl.gram[a][b] == 1;
    }
    // Each Fermat line meets 3 + 3 lines of its own pairing and 4 of each other one.
    CHECK(meets == 14);
  }
}
