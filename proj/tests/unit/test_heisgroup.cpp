#include <doctest.h>

#include <set>

#include "hq/heisgroup.hpp"

using namespace hq;

namespace {

// Standard symplectic form on F2^4 with (i,j) paired against (k,l).
int symplectic_oracle(GroupLabel g, GroupLabel h) {
  return (g.exponent(0) * h.exponent(2) + g.exponent(2) * h.exponent(0) + g.exponent(1) * h.exponent(3) +
          g.exponent(3) * h.exponent(1)) %
         2;
}

bool commute(GroupLabel g, GroupLabel h) { return lift(g) * lift(h) == lift(h) * lift(g); }

// Lines meet iff the four spanning vectors have rank at most 3.
bool meet_oracle(const Line& a, const Line& b) {
  return matrix_rank(stack_points({a.first(), a.second(), b.first(), b.second()})) <= 3;
}

Point add(const Point& a, const Point& b) {
  Point out;
  for (int k = 0; k < 4; ++k) out[k] = a[k] + b[k];
  return out;
}

}  // namespace

TEST_CASE("labels and generators") {
  CHECK(GroupLabel::from_exponents(1, 0, 1, 1).index() == 11);
  CHECK(GroupLabel(11).name() == "s1*t1*t2");
  CHECK(GroupLabel(0).name() == "1");
  CHECK(all_labels().size() == 16);
  for (const auto g : all_labels()) {
    CHECK(label_of(lift(g)) == g);
    CHECK(label_of(negated(lift(g))) == g);
    const IntMatrix4 sq = lift(g) * lift(g);
    CHECK((sq == identity4() || sq == negated(identity4())));
  }
  IntMatrix4 scaled = identity4();
  scaled[0][0] = 2;
  CHECK_FALSE(label_of(scaled).has_value());
}

TEST_CASE("enumerated group has order 32 with center and commutators of order 2") {
  const GroupTable t = enumerate_group();
  CHECK(t.elements.size() == 32);
  CHECK(t.center.size() == 2);
  CHECK(t.commutators.size() == 2);
  CHECK(t.labels.size() == 16);
  const std::set<IntMatrix4> center(t.center.begin(), t.center.end());
  CHECK(center == std::set<IntMatrix4>{identity4(), negated(identity4())});
}

TEST_CASE("commutator pairing against the explicit matrices") {
  for (const auto g : all_labels())
    for (const auto h : all_labels()) {
      CHECK(symplectic_form(g, h) == symplectic_oracle(g, h));
      CHECK((symplectic_form(g, h) == 0) == commute(g, h));
      const int sign = (g.exponent(2) * h.exponent(0) + g.exponent(3) * h.exponent(1)) % 2 == 0 ? 1 : -1;
      CHECK(lift_product_sign(g, h) == sign);
    }
}

TEST_CASE("symplectic form is alternating and bilinear") {
  const auto labels = all_labels();
  for (const auto a : labels) {
    CHECK(symplectic_form(a, a) == 0);
    for (const auto b : labels)
      for (const auto c : labels) CHECK(symplectic_form(a + b, c) == (symplectic_form(a, c) + symplectic_form(b, c)) % 2);
  }
  // Nondegenerate: the Gram matrix on the basis has full F2 rank.
  std::vector<std::vector<int>> gram(4, std::vector<int>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) gram[r][c] = symplectic_form(GroupLabel(1U << r), GroupLabel(1U << c));
  CHECK(f2_rank(gram) == 4);
  CHECK(f2_rank({{1, 1}, {1, 1}}) == 1);
}

TEST_CASE("lift products are cocycles") {
  const auto labels = all_labels();
  for (const auto a : labels)
    for (const auto b : labels)
      for (const auto c : labels)
        CHECK(lift_product_sign(a, b) * lift_product_sign(a + b, c) == lift_product_sign(b, c) * lift_product_sign(a, b + c));
}

TEST_CASE("fix lines are eigenspaces") {
  const auto lines = all_fix_lines();
  REQUIRE(lines.size() == 30);
  for (const auto& fl : lines) {
    const IntMatrix4 m = lift(fl.owner);
    for (const Point& p : {fl.line.first(), fl.line.second()}) {
      const Point image = transform_point(m, p);
      for (int k = 0; k < 4; ++k) CHECK(image[k] == fl.eigenvalue * p[k]);
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) CHECK_FALSE(lines[i].line == lines[j].line);
  CHECK_THROWS_AS(fix_lines(GroupLabel(0)), std::invalid_argument);
}

TEST_CASE("tau1 fixes the coordinate lines") {
  const auto lines = fix_lines(GroupLabel::from_exponents(0, 0, 1, 0));
  const Line zw = Line::through(make_point(1, 0, 0, 0), make_point(0, 1, 0, 0));
  const Line xy = Line::through(make_point(0, 0, 1, 0), make_point(0, 0, 0, 1));
  CHECK(((lines[0].line == zw && lines[1].line == xy) || (lines[0].line == xy && lines[1].line == zw)));
  // sigma1 swaps (x,z) and (y,w): its +1 line is spanned by (1,0,1,0), (0,1,0,1).
  const auto s1 = fix_lines(GroupLabel::from_exponents(1, 0, 0, 0));
  const Line plus = Line::through(make_point(1, 0, 1, 0), make_point(0, 1, 0, 1));
  CHECK((s1[0].line == plus || s1[1].line == plus));
}

TEST_CASE("fix lines meet exactly when their owners commute") {
  for (const auto g : all_labels())
    for (const auto h : all_labels()) {
      if (g.is_identity() || h.is_identity() || g == h) continue;
      const auto inc = fixline_incidence(g, h);
      const auto lg = fix_lines(g), lh = fix_lines(h);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          CHECK(inc.meets[a][b] == meet_oracle(lg[a].line, lh[b].line));
          CHECK(inc.meets[a][b] == commute(g, h));
        }
    }
}

TEST_CASE("plane classification") {
  const auto pc = classify_planes();
  CHECK(pc.isotropic.size() == 15);
  CHECK(pc.anisotropic.size() == 20);
  CHECK(pc.orthogonal_pairs.size() == 10);
  for (const auto& [p, q] : pc.orthogonal_pairs) {
    CHECK(p.orthogonal() == q);
    CHECK(q.orthogonal() == p);
    CHECK_FALSE(q.is_isotropic());
    for (const auto a : p.nonzero_members())
      for (const auto b : q.nonzero_members()) CHECK(symplectic_form(a, b) == 0);
  }
  for (const auto& p : pc.isotropic) CHECK(p.orthogonal() == p);
  const F2Plane p(GroupLabel(3), GroupLabel(2));
  CHECK(p.first() == GroupLabel(1));
  CHECK(p.second() == GroupLabel(2));
  CHECK(p.contains(GroupLabel(3)));
  CHECK_FALSE(p.contains(GroupLabel(4)));
}

TEST_CASE("tetrahedron of the diagonal subgroup is the coordinate tetrahedron") {
  const Tetrahedron t = tetrahedron_of(F2Plane(GroupLabel(1), GroupLabel(2)));
  const MPoly x = MPoly::variable(4, 0), y = MPoly::variable(4, 1), z = MPoly::variable(4, 2), w = MPoly::variable(4, 3);
  CHECK(t.face_product == x * y * z * w);
  CHECK(t.edges.size() == 6);
  CHECK(t.vertices.size() == 4);
  CHECK_THROWS_AS(tetrahedron_of(F2Plane(GroupLabel(8), GroupLabel(2))), std::invalid_argument);
}

TEST_CASE("every isotropic plane gives an invariant tetrahedron") {
  for (const auto& p : classify_planes().isotropic) {
    const Tetrahedron t = tetrahedron_of(p);
    CHECK(t.vertices.size() == 4);
    CHECK(t.face_product.total_degree() == 4);
    // Each face contains exactly three vertices.
    for (const auto& f : t.faces) {
      int on = 0;
      for (const auto& v : t.vertices) on += pairing(f, v).is_zero();
      CHECK(on == 3);
    }
    // The vertex set is permuted by the whole group.
    for (const auto g : all_labels())
      for (const auto& v : t.vertices) {
        const Point image = normalized(transform_point(lift(g), v));
        CHECK(std::any_of(t.vertices.begin(), t.vertices.end(), [&](const Point& u) { return same_point(u, image); }));
      }
  }
}

TEST_CASE("fundamental quadrics contain twelve lines in two rulings") {
  for (const auto& [p, q] : classify_planes().orthogonal_pairs) {
    const FundamentalQuadric fq = quadric_of(p, q);
    REQUIRE(fq.lines.size() == 12);
    CHECK(fq.form.total_degree() == 2);
    for (const auto& fl : fq.lines) {
      CHECK(fq.form.evaluate(fl.line.first()).is_zero());
      CHECK(fq.form.evaluate(fl.line.second()).is_zero());
      CHECK(fq.form.evaluate(add(fl.line.first(), fl.line.second())).is_zero());
    }
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = i + 1; j < 12; ++j)
        CHECK(lines_meet(fq.lines[i].line, fq.lines[j].line) == ((i < 6) != (j < 6)));
  }
  const auto pc = classify_planes();
  CHECK_THROWS_AS(quadric_of(pc.isotropic[0], pc.isotropic[0]), std::invalid_argument);
  CHECK_THROWS_AS(quadric_of(pc.anisotropic[0], pc.anisotropic[0]), std::invalid_argument);
}
