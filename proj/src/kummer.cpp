#include "hq/kummer.hpp"

#include <algorithm>

namespace hq {

std::array<FieldElement, 4> gradient_at(const MPoly& f, const Point& p) {
  std::array<FieldElement, 4> g;
  for (int k = 0; k < 4; ++k) g[k] = f.derivative(k).evaluate(p);
  return g;
}

ParamU kummer_param_at(const Point& p) {
  for (const auto& c : p) {
    if (!c.is_rational()) throw std::invalid_argument("seed point must be rational");
  }
  const auto g = g_basis();
  Matrix<Rational> system(4, 5);
  for (int k = 0; k < 5; ++k) {
    const auto grad = gradient_at(g[k], p);
    for (int i = 0; i < 4; ++i) system(i, k) = grad[i].to_rational();
  }
  const auto kernel = null_space(system);
  if (kernel.size() != 1) {
    throw SingularSystemError("the invariant quartics singular at " + point_string(p) + " form a space of dimension " +
                              std::to_string(kernel.size()) + " (point on a fix line?)");
  }
  std::array<Rational, 5> lambda;
  std::copy(kernel[0].begin(), kernel[0].end(), lambda.begin());
  return abcde_to_u(ParamABCDE(lambda)).normalized();
}

KummerSeed build_seed(const Point& p) {
  const Point node = normalized(p);
  KummerSeed seed{node, kummer_param_at(node), MPoly(4), {}, {}, {}};
  seed.quartic = quartic_from(seed.param);
  for (const auto g : all_labels()) {
    // Signed permutations are orthogonal, so planes move by the same matrix as points.
    const Point q = normalized(transform_point(lift(g), node));
    seed.nodes.push_back(q);
    seed.tropes.push_back(q);
  }
  for (std::size_t a = 0; a < seed.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < seed.nodes.size(); ++b)
      if (seed.nodes[a] == seed.nodes[b]) throw DegenerateError("the H-orbit of the seed point has fewer than 16 points");
  for (const auto& q : seed.nodes) {
    const auto grad = gradient_at(seed.quartic, q);
    if (!std::all_of(grad.begin(), grad.end(), [](const FieldElement& v) { return v.is_zero(); }))
      throw DegenerateError("orbit point " + point_string(q) + " is not singular");
  }
  seed.incidence.assign(16, std::vector<bool>(16, false));
  for (int t = 0; t < 16; ++t)
    for (int n = 0; n < 16; ++n) seed.incidence[t][n] = pairing(seed.tropes[t], seed.nodes[n]).is_zero();
  return seed;
}

std::array<FieldElement, 3> plane_coordinates(const PlaneForm& plane, const Point& p) {
  int pivot = 0;
  while (pivot < 4 && plane[pivot].is_zero()) ++pivot;
  if (pivot == 4) throw std::invalid_argument("zero plane");
  std::array<FieldElement, 3> out;
  int slot = 0;
  for (int k = 0; k < 4; ++k)
    if (k != pivot) out[slot++] = p[k];
  return out;
}

TropeConic trope_square(const KummerSeed& seed, int trope) {
  if (trope < 0 || trope >= static_cast<int>(seed.tropes.size())) throw std::invalid_argument("no such trope");
  const PlaneForm& plane = seed.tropes[trope];
  const MPoly section = restrict_to_plane(seed.quartic, plane);
  const auto root = perfect_square_root(section);
  if (!root || root->root.is_zero()) throw DegenerateError("trope section is not a nonzero square");
  TropeConic out{plane, root->scale, root->root, {}};
  for (int n = 0; n < 16; ++n)
    if (seed.incidence[trope][n]) out.nodes_on.push_back(n);
  return out;
}

ThirdIntersection third_intersection(const ParamU& u, const ParamU& q) {
  if (!is_segre_singular(q)) throw std::invalid_argument("q is not a node of the Segre cubic");
  if (segre_membership(u)) throw std::invalid_argument("u lies on the Segre cubic");
  const MPoly t = MPoly::variable(1, 0);
  MPoly cubic(1);
  for (int k = 0; k < 6; ++k) {
    const MPoly coord = MPoly::constant(1, FieldElement(q[k])) + FieldElement(u[k]) * t;
    cubic += coord.pow(3);
  }
  const auto deflated = divide_exact(cubic, t * t);
  if (!deflated) throw std::logic_error("restricted cubic has no double root at the node");
  const auto lin = dense_coefficients(*deflated);
  if (lin.size() != 2) throw std::logic_error("deflated cubic is not linear");
  if (lin[0].is_zero()) throw DegenerateError("the line meets the Segre cubic only at the node");
  const Rational root = (-lin[0] / lin[1]).to_rational();
  std::array<Rational, 6> point;
  for (int k = 0; k < 6; ++k) point[k] = q[k] + root * u[k];
  return ThirdIntersection{ParamU(point).normalized(), cubic, true};
}

namespace {

struct RootInTower {
  FieldElement value;
  TowerPtr tower;
};

// Square root of a rational, extending `tower` by the squarefree part when needed.
RootInTower adjoin_sqrt(const Rational& r, TowerPtr tower) {
  if (auto q = rational_sqrt(r)) return {FieldElement(*q), tower};
  const Integer n = r.get_num() * r.get_den();
  const Integer s = squarefree_kernel(n);
  const Integer m = sqrt(Integer(n / s));
  const FieldElement scale(make_rational(m, r.get_den()));
  const FieldElement radicand(s);
  // mu = (positive rational) * generator whenever the generator is sqrt(s).
  if (tower->height() > 0 && tower->radicand() == radicand) return {scale * FieldElement::generator(tower), tower};
  if (auto root = sqrt_in_field(radicand.lifted(tower))) return {scale * *root, tower};
  tower = tower->extend(radicand);
  return {scale * FieldElement::generator(tower), tower};
}

bool smooth_conic(const MPoly& c) { return !det3(quadratic_form_matrix(c)).is_zero(); }

}  // namespace

ConicSplitting split_trope_conics(const ParamU& u, const KummerSeed& seed, const ParamU& q) {
  const MPoly fu = quartic_from(u);
  const MPoly fq = quartic_from(q);
  const auto lu = abcde_of(fu), lk = abcde_of(seed.quartic), lq = abcde_of(fq);
  if (!lu || !lk || !lq) throw std::logic_error("parameter quartic outside the invariant family");
  Matrix<FieldElement> system(5, 2);
  std::vector<FieldElement> rhs(5);
  for (int k = 0; k < 5; ++k) {
    system(k, 0) = (*lk)[k];
    system(k, 1) = (*lq)[k];
    rhs[k] = (*lu)[k];
  }
  const auto sol = solve_linear(system, rhs);
  if (!sol) throw std::invalid_argument("u is not on the line through the seed parameter and q");
  const Rational alpha = (*sol)[0].to_rational(), beta = (*sol)[1].to_rational();
  if (!(FieldElement(alpha) * seed.quartic + FieldElement(beta) * fq == fu))
    throw std::logic_error("pencil decomposition does not reproduce F_u");
  if (sgn(alpha) == 0) throw std::invalid_argument("u coincides with the node q");
  if (sgn(beta) == 0) throw DegenerateError("u is the seed parameter, so mu^2 = 0");

  ConicSplitting out{u, alpha, beta, {}, Tower::rationals()};
  for (int t = 0; t < static_cast<int>(seed.tropes.size()); ++t) {
    const TropeConic g = trope_square(seed, t);
    const MPoly section_q = restrict_to_plane(fq, g.plane);
    const auto root_q = perfect_square_root(section_q);
    if (!root_q || root_q->root.is_zero()) throw DegenerateError("node quartic does not restrict to a square");
    const Rational c = g.scale.to_rational(), cq = root_q->scale.to_rational();
    const Rational mu2 = -beta * cq / (alpha * c);
    RootInTower mu = adjoin_sqrt(mu2, out.tower);
    out.tower = mu.tower;
    ConicPair pair;
    pair.trope = t;
    pair.plane = g.plane;
    pair.scale = FieldElement(alpha * c);
    pair.first = g.conic - mu.value * root_q->root;
    pair.second = g.conic + mu.value * root_q->root;
    pair.mu_squared = mu2;
    pair.mu = mu.value;
    if (!(pair.scale * pair.first * pair.second == restrict_to_plane(fu, g.plane)))
      throw std::logic_error("conic pair does not multiply back to the trope section");
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

ConicSplitting construct_conics(const KummerSeed& seed, const ParamU& q, long start, int attempts) {
  for (long t = start; t < start + attempts; ++t) {
    std::array<Rational, 6> v;
    for (int k = 0; k < 6; ++k) v[k] = seed.param[k] + Rational(t) * q[k];
    const ParamU u(v);
    if (sgn(singular_discriminant(u)) == 0) continue;
    try {
      ConicSplitting s = split_trope_conics(u, seed, q);
      const bool smooth = std::all_of(s.pairs.begin(), s.pairs.end(), [](const ConicPair& p) {
        return smooth_conic(p.first) && smooth_conic(p.second);
      });
      if (smooth) return s;
    } catch (const DegenerateError&) {
      continue;
    }
  }
  throw DegenerateError("no generic line parameter found");
}

FixedPointCount fixed_points_count(const ParamU& u, GroupLabel g) {
  if (g.is_identity()) throw std::invalid_argument("the identity fixes every point");
  if (sgn(singular_discriminant(u)) == 0) throw std::invalid_argument("X_u is singular");
  const MPoly f = quartic_from(u);
  FixedPointCount out{g, {}, {MPoly(2), MPoly(2)}};
  const auto lines = fix_lines(g);
  const std::vector<MPoly> affine{MPoly::constant(1, FieldElement(1)), MPoly::variable(1, 0)};
  for (int k = 0; k < 2; ++k) {
    const auto param = lines[k].line.parameterization();
    const MPoly binary = f.substitute(param);
    if (binary.is_zero()) throw DegenerateError("X_u contains a fix line");
    out.restrictions[k] = binary;
    // Dehomogenize at the first spanning point; missing degree is a root at the second.
    const MPoly h = binary.substitute(affine);
    const int d = h.total_degree();
    if (4 - d >= 2) throw DegenerateError("X_u is tangent to a fix line at a spanning point");
    const int sd = univ_squarefree_part(h).total_degree();
    if (sd != d) throw DegenerateError("X_u is tangent to a fix line");
    out.per_line[k] = sd + (d < 4 ? 1 : 0);
  }
  return out;
}

MukaiSummary mukai_summary(const ParamU& u) {
  MukaiSummary out;
  long sum = 24;
  for (const auto g : all_labels()) {
    if (g.is_identity()) continue;
    out.counts.push_back(fixed_points_count(u, g));
    sum += out.counts.back().total();
  }
  out.average = make_rational(sum, 16);
  out.invariant_rank = out.average - 2;
  return out;
}

}  // namespace hq
