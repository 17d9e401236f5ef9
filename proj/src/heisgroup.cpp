#include "hq/heisgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hq {

std::string GroupLabel::name() const {
  static const char* const names[4] = {"s1", "s2", "t1", "t2"};
  std::string out;
  for (int g = 0; g < 4; ++g) {
    if (!exponent(g)) continue;
    if (!out.empty()) out += "*";
    out += names[g];
  }
  return out.empty() ? "1" : out;
}

std::vector<GroupLabel> all_labels() {
  std::vector<GroupLabel> labels;
  for (unsigned k = 0; k < 16; ++k) labels.emplace_back(k);
  return labels;
}

IntMatrix4 generator_matrix(Generator g) {
  IntMatrix4 m{};
  switch (g) {
    case Generator::sigma1:  // (x,y,z,w) -> (z,w,x,y)
      m[0][2] = m[1][3] = m[2][0] = m[3][1] = 1;
      break;
    case Generator::sigma2:  // (x,y,z,w) -> (y,x,w,z)
      m[0][1] = m[1][0] = m[2][3] = m[3][2] = 1;
      break;
    case Generator::tau1:
      m[0][0] = m[1][1] = 1;
      m[2][2] = m[3][3] = -1;
      break;
    case Generator::tau2:
      m[0][0] = m[2][2] = 1;
      m[1][1] = m[3][3] = -1;
      break;
  }
  return m;
}

IntMatrix4 lift(GroupLabel g) {
  static const Generator gens[4] = {Generator::sigma1, Generator::sigma2, Generator::tau1, Generator::tau2};
  IntMatrix4 m = identity4();
  for (int k = 0; k < 4; ++k) {
    if (g.exponent(k)) m = m * generator_matrix(gens[k]);
  }
  return m;
}

int lift_product_sign(GroupLabel g, GroupLabel h) {
  const IntMatrix4 p = lift(g) * lift(h);
  const IntMatrix4 l = lift(g + h);
  if (p == l) return 1;
  if (p == negated(l)) return -1;
  throw std::logic_error("lift product is not a signed lift");
}

std::optional<GroupLabel> label_of(const IntMatrix4& m) {
  for (const auto g : all_labels()) {
    const IntMatrix4 l = lift(g);
    if (m == l || m == negated(l)) return g;
  }
  return std::nullopt;
}

namespace {

std::vector<IntMatrix4> closure(const std::vector<IntMatrix4>& gens) {
  std::set<IntMatrix4> seen{identity4()};
  std::deque<IntMatrix4> queue{identity4()};
  while (!queue.empty()) {
    const IntMatrix4 m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const IntMatrix4 p = m * g;
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

GroupTable enumerate_group() {
  GroupTable table;
  table.elements = closure({generator_matrix(Generator::sigma1), generator_matrix(Generator::sigma2),
                            generator_matrix(Generator::tau1), generator_matrix(Generator::tau2)});
  for (const auto& a : table.elements) {
    const bool central = std::all_of(table.elements.begin(), table.elements.end(),
                                     [&](const IntMatrix4& b) { return a * b == b * a; });
    if (central) table.center.push_back(a);
  }
  std::vector<IntMatrix4> comms;
  for (const auto& a : table.elements)
    for (const auto& b : table.elements) {
      // Signed permutation matrices are orthogonal, so the inverse is the transpose.
      const IntMatrix4 c = a * b * transposed(a) * transposed(b);
      if (std::find(comms.begin(), comms.end(), c) == comms.end()) comms.push_back(c);
    }
  table.commutators = closure(comms);
  std::set<unsigned> labels;
  for (const auto& m : table.elements) {
    const auto g = label_of(m);
    if (!g) throw std::logic_error("group element without a label");
    labels.insert(g->index());
  }
  for (unsigned k : labels) table.labels.emplace_back(k);
  return table;
}

int symplectic_form(GroupLabel g, GroupLabel h) {
  const IntMatrix4 a = lift(g), b = lift(h);
  return a * b == b * a ? 0 : 1;
}

int f2_rank(std::vector<std::vector<int>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (auto& r : rows)
    for (auto& v : r) v &= 1;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && rows[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::array<FixLine, 2> fix_lines(GroupLabel g) {
  if (g.is_identity()) throw std::invalid_argument("the identity has no fix lines");
  const IntMatrix4 m = lift(g);
  const bool involution = m * m == identity4();
  const FieldElement one = involution ? FieldElement(1) : FieldElement::imaginary_unit();
  std::vector<FixLine> out;
  for (const FieldElement& lambda : {one, -one}) {
    // M^2 = lambda^2, so the lambda-eigenspace is the column space of M + lambda.
    Matrix<FieldElement> cols(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        FieldElement v(static_cast<long>(m[c][r]));
        if (r == c) v += lambda;
        cols(r, c) = v;
      }
    const auto ech = reduced_row_echelon(cols);
    if (ech.pivots.size() != 2) throw std::logic_error("eigenspace is not two-dimensional");
    Point a, b;
    for (int k = 0; k < 4; ++k) {
      a[k] = ech.reduced(0, k);
      b[k] = ech.reduced(1, k);
    }
    out.push_back(FixLine{g, lambda, Line::through(a, b)});
  }
  if (out[1].line < out[0].line) std::swap(out[0], out[1]);
  return {out[0], out[1]};
}

std::vector<FixLine> all_fix_lines() {
  std::vector<FixLine> lines;
  for (const auto g : all_labels()) {
    if (g.is_identity()) continue;
    for (auto& l : fix_lines(g)) lines.push_back(l);
  }
  return lines;
}

FixLineIncidence fixline_incidence(GroupLabel g, GroupLabel h) {
  const auto a = fix_lines(g), b = fix_lines(h);
  FixLineIncidence inc{g, h, {}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) inc.meets[i][j] = lines_meet(a[i].line, b[j].line);
  return inc;
}

F2Plane::F2Plane(GroupLabel g, GroupLabel h) {
  if (g.is_identity() || h.is_identity() || g == h) throw std::invalid_argument("labels do not span a plane");
  std::array<GroupLabel, 3> m{g, h, g + h};
  std::sort(m.begin(), m.end());
  a_ = m[0];
  b_ = m[1];
}

bool F2Plane::contains(GroupLabel g) const { return g.is_identity() || g == a_ || g == b_ || g == a_ + b_; }

F2Plane F2Plane::orthogonal() const {
  std::vector<GroupLabel> perp;
  for (const auto g : all_labels()) {
    if (!g.is_identity() && symplectic_form(g, a_) == 0 && symplectic_form(g, b_) == 0) perp.push_back(g);
  }
  if (perp.size() != 3) throw std::logic_error("orthogonal complement is not a plane");
  return F2Plane(perp[0], perp[1]);
}

std::string F2Plane::name() const { return "<" + a_.name() + ", " + b_.name() + ">"; }

PlaneClassification classify_planes() {
  std::vector<F2Plane> planes;
  for (unsigned g = 1; g < 16; ++g)
    for (unsigned h = g + 1; h < 16; ++h) {
      F2Plane p{GroupLabel(g), GroupLabel(h)};
      if (std::find(planes.begin(), planes.end(), p) == planes.end()) planes.push_back(p);
    }
  PlaneClassification out;
  for (const auto& p : planes) (p.is_isotropic() ? out.isotropic : out.anisotropic).push_back(p);
  for (const auto& p : out.anisotropic) {
    const F2Plane q = p.orthogonal();
    const auto key = [](const F2Plane& x) { return std::make_pair(x.first().index(), x.second().index()); };
    if (key(p) < key(q)) out.orthogonal_pairs.emplace_back(p, q);
  }
  return out;
}

Tetrahedron tetrahedron_of(const F2Plane& plane) {
  if (!plane.is_isotropic()) throw std::invalid_argument("tetrahedra come from isotropic planes");
  Tetrahedron t{plane, {}, {}, {}, MPoly(4)};
  for (const auto g : plane.nonzero_members())
    for (auto& l : fix_lines(g)) t.edges.push_back(l);
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    for (std::size_t j = i + 1; j < t.edges.size(); ++j) {
      if (t.edges[i].owner == t.edges[j].owner) continue;
      const auto p = intersection(t.edges[i].line, t.edges[j].line);
      if (!p) continue;
      const bool known = std::any_of(t.vertices.begin(), t.vertices.end(),
                                     [&](const Point& v) { return v == *p; });
      if (!known) t.vertices.push_back(*p);
    }
  if (t.vertices.size() != 4) throw std::logic_error("tetrahedron does not have 4 vertices");
  std::sort(t.vertices.begin(), t.vertices.end(), point_less);
  for (const auto& e : t.edges) {
    const auto on = std::count_if(t.vertices.begin(), t.vertices.end(),
                                  [&](const Point& v) { return e.line.contains(v); });
    if (on != 2) throw std::logic_error("tetrahedron edge does not join two vertices");
  }
  MPoly product = MPoly::constant(4, FieldElement(1));
  for (int skip = 3; skip >= 0; --skip) {
    std::vector<Point> face;
    for (int k = 0; k < 4; ++k)
      if (k != skip) face.push_back(t.vertices[k]);
    const PlaneForm f = plane_through(face[0], face[1], face[2]);
    t.faces.push_back(f);
    product = product * MPoly::linear_form(f);
  }
  t.face_product = product.normalized();
  return t;
}

namespace {

std::vector<Exponent> quadratic_monomials() {
  std::vector<Exponent> out;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      Exponent e{};
      e[a] += 1;
      e[b] += 1;
      out.push_back(e);
    }
  return out;
}

}  // namespace

FundamentalQuadric quadric_of(const F2Plane& first, const F2Plane& second) {
  if (first.is_isotropic() || second.is_isotropic()) throw std::invalid_argument("quadrics come from anisotropic planes");
  if (!(first.orthogonal() == second)) throw std::invalid_argument("planes are not orthogonal");
  FundamentalQuadric q{first, second, {}, MPoly(4)};
  for (const auto& p : {first, second})
    for (const auto g : p.nonzero_members())
      for (auto& l : fix_lines(g)) q.lines.push_back(l);

  // Each line gives 3 conditions: the coefficients of s^2, st, t^2.
  const auto monos = quadratic_monomials();
  Matrix<FieldElement> system(3 * q.lines.size(), monos.size());
  for (std::size_t li = 0; li < q.lines.size(); ++li) {
    const auto param = q.lines[li].line.parameterization();
    for (std::size_t m = 0; m < monos.size(); ++m) {
      const MPoly image = MPoly::monomial(4, monos[m], FieldElement(1)).substitute(param);
      for (int d = 0; d < 3; ++d) {
        Exponent e{};
        e[0] = static_cast<std::uint8_t>(2 - d);
        e[1] = static_cast<std::uint8_t>(d);
        system(3 * li + d, m) = image.coefficient(e);
      }
    }
  }
  const auto kernel = null_space(system);
  if (kernel.size() != 1) throw std::logic_error("fundamental quadric is not unique");
  MPoly form(4);
  for (std::size_t m = 0; m < monos.size(); ++m) form.add_term(monos[m], kernel[0][m]);
  q.form = form.normalized();
  return q;
}

}  // namespace hq
