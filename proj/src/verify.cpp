#include "hq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hq/conicconfig.hpp"
#include "hq/family.hpp"
#include "hq/heisgroup.hpp"
#include "hq/kleinlines.hpp"
#include "hq/kummer.hpp"
#include "hq/lattice.hpp"

namespace hq {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(bool b) { return b ? "true" : "false"; }

std::string distribution_string(const std::map<long, int>& d) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : d) {
    os << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}
  template <class A, class B>
  void equal(const std::string& name, const A& expected, const B& actual) {
    const std::string e = str(expected), a = str(actual);
    r_.checks.push_back({name, e, a, e == a});
  }
  void holds(const std::string& name, bool value) { r_.checks.push_back({name, "true", str(value), value}); }
  void failed(const std::string& name, const std::string& what) { r_.checks.push_back({name, "no error", what, false}); }

 private:
  CriterionResult& r_;
};

Point random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-12, 12);
  while (true) {
    Point p = make_point(d(rng), d(rng), d(rng), d(rng));
    if (std::any_of(p.begin(), p.end(), [](const FieldElement& c) { return !c.is_zero(); })) return p;
  }
}

ParamU random_param(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-12, 12);
  while (true) {
    std::array<long, 6> v{};
    long s = 0;
    for (int k = 0; k < 5; ++k) s += v[k] = d(rng);
    v[5] = -s;
    if (std::any_of(v.begin(), v.end(), [](long x) { return x != 0; })) return ParamU::from_ints(v);
  }
}

Line moved_line(const Line& l, const IntMatrix4& m) {
  return Line::through(transform_point(m, l.first()), transform_point(m, l.second()));
}

// 1 ------------------------------------------------------------------------
void group_structure(Recorder& rec, std::uint64_t) {
  const GroupTable t = enumerate_group();
  rec.equal("order of H22", 32, t.elements.size());
  rec.equal("center size", 2, t.center.size());
  const IntMatrix4 id = identity4();
  const bool center_is_pm1 = t.center.size() == 2 &&
                             std::find(t.center.begin(), t.center.end(), id) != t.center.end() &&
                             std::find(t.center.begin(), t.center.end(), negated(id)) != t.center.end();
  rec.holds("center is {1, -1}", center_is_pm1);
  rec.holds("commutator subgroup equals the center", t.commutators == t.center);
  rec.equal("labels of H", 16, t.labels.size());
  bool squares_central = true;
  for (const auto& m : t.elements) squares_central &= (m * m == id || m * m == negated(id));
  rec.holds("every element squares into the center", squares_central);
  bool order_two = true;
  for (const auto g : all_labels()) order_two &= (g + g).is_identity();
  rec.holds("every label has order dividing 2", order_two);
  std::vector<std::vector<int>> form(4, std::vector<int>(4));
  const GroupLabel basis[4] = {GroupLabel(8), GroupLabel(4), GroupLabel(2), GroupLabel(1)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) form[i][j] = symplectic_form(basis[i], basis[j]);
  rec.equal("rank of the commutator form", 4, f2_rank(form));
  bool matches_lifts = true;
  for (const auto g : all_labels())
    for (const auto h : all_labels()) {
      const bool commute = lift(g) * lift(h) == lift(h) * lift(g);
      matches_lifts &= commute == (symplectic_form(g, h) == 0);
    }
  rec.holds("form agrees with commutation of lifts", matches_lifts);
  const PlaneClassification pc = classify_planes();
  rec.equal("planes", 35, pc.isotropic.size() + pc.anisotropic.size());
  rec.equal("isotropic planes", 15, pc.isotropic.size());
  rec.equal("anisotropic planes", 20, pc.anisotropic.size());
}

// 2 ------------------------------------------------------------------------
void fix_line_checks(Recorder& rec, std::uint64_t) {
  const auto lines = all_fix_lines();
  rec.equal("fix lines", 30, lines.size());
  std::size_t distinct = 0;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    bool fresh = true;
    for (std::size_t b = 0; b < a; ++b) fresh &= !(lines[a].line == lines[b].line);
    distinct += fresh;
  }
  rec.equal("distinct fix lines", 30, distinct);
  std::size_t agree = 0, pairs = 0;
  for (const auto g : all_labels())
    for (const auto h : all_labels()) {
      if (g.is_identity() || h.is_identity() || g == h) continue;
      ++pairs;
      const FixLineIncidence inc = fixline_incidence(g, h);
      const bool commute = symplectic_form(g, h) == 0;
      bool ok = true;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) ok &= inc.meets[a][b] == commute;
      agree += ok;
    }
  rec.equal("pairs where meeting matches commuting", pairs, agree);
  std::size_t preserved = 0, checked = 0;
  for (const auto g : all_labels()) {
    if (g.is_identity()) continue;
    const auto own = fix_lines(g);
    for (const auto h : all_labels()) {
      const bool commute = symplectic_form(g, h) == 0;
      for (int k = 0; k < 2; ++k) {
        ++checked;
        const Line image = moved_line(own[k].line, lift(h));
        preserved += image == own[commute ? k : 1 - k].line;
      }
    }
  }
  rec.equal("fix lines preserved or swapped as predicted", checked, preserved);
}

// 3 ------------------------------------------------------------------------
void tetrahedra_quadrics(Recorder& rec, std::uint64_t) {
  const PlaneClassification pc = classify_planes();
  const auto t_points = s6_orbit(t0_param());
  const auto nodes = s6_orbit(q0_param());
  rec.equal("T-points", 15, t_points.size());
  rec.equal("Segre nodes", 10, nodes.size());
  std::set<ParamU> matched;
  std::size_t tetrahedra = 0;
  for (const auto& p : pc.isotropic) {
    const Tetrahedron te = tetrahedron_of(p);
    ++tetrahedra;
    if (auto u = match_parameter(te.face_product, t_points)) matched.insert(*u);
  }
  rec.equal("tetrahedra", 15, tetrahedra);
  rec.equal("distinct T-points matched by face products", 15, matched.size());
  matched.clear();
  std::size_t quadrics = 0, on_quadric = 0;
  for (const auto& [a, b] : pc.orthogonal_pairs) {
    const FundamentalQuadric q = quadric_of(a, b);
    ++quadrics;
    for (const auto& l : q.lines) on_quadric += line_on_surface(l.line, q.form);
    if (auto u = match_parameter(q.form * q.form, nodes)) matched.insert(*u);
  }
  rec.equal("fundamental quadrics (each unique)", 10, quadrics);
  rec.equal("fix lines on their quadric", 120, on_quadric);
  rec.equal("distinct Segre nodes matched by squared quadrics", 10, matched.size());
}

// 4 ------------------------------------------------------------------------
void parameter_maps(Recorder& rec, std::uint64_t seed) {
  // Both maps are linear, so agreement on a basis of U is the symbolic identity.
  bool basis_ok = true;
  for (int k = 0; k < 5; ++k) {
    std::array<long, 6> v{};
    v[k] = 1;
    v[5] = -1;
    const ParamU u = ParamU::from_ints(v);
    std::array<Rational, 6> four;
    for (int i = 0; i < 6; ++i) four[i] = 4 * u[i];
    basis_ok &= abcde_to_u(u_to_abcde(u)) == ParamU(four);
  }
  rec.holds("abcde_to_u after u_to_abcde is 4 id on a basis of U", basis_ok);
  std::mt19937_64 rng(seed);
  bool random_ok = true;
  for (int s = 0; s < 50; ++s) {
    const ParamU u = random_param(rng);
    std::array<Rational, 6> four;
    for (int i = 0; i < 6; ++i) four[i] = 4 * u[i];
    random_ok &= abcde_to_u(u_to_abcde(u)) == ParamU(four);
    random_ok &= quartic_from(u) == FieldElement(Rational(1, 4)) * quartic_from(abcde_to_u(u_to_abcde(u)));
  }
  rec.holds("identity on 50 random parameters", random_ok);
  const ParamU fermat = abcde_to_u(ParamABCDE({1, 0, 0, 0, 0}));
  rec.equal("Fermat parameter", "(1,1,1,1,-2,-2)", fermat.to_string());
  rec.holds("Fermat parameter gives 4 (x^4+y^4+z^4+w^4)", quartic_from(fermat) == FieldElement(4) * g_basis()[0]);
}

// 5 ------------------------------------------------------------------------
void kummer_seed(Recorder& rec, std::uint64_t) {
  const KummerSeed seed = build_seed(make_point(1, 2, 3, 4));
  rec.equal("seed parameter", "(1,-34,-43,226/5,149/5,1)", seed.param.to_string());
  rec.holds("parameter on the Segre cubic", segre_membership(seed.param));
  rec.holds("singular discriminant vanishes", sgn(singular_discriminant(seed.param)) == 0);
  std::set<std::string> node_set, trope_set;
  std::size_t singular = 0;
  for (const auto& n : seed.nodes) {
    node_set.insert(point_string(n));
    const auto g = gradient_at(seed.quartic, n);
    singular += std::all_of(g.begin(), g.end(), [](const FieldElement& v) { return v.is_zero(); });
  }
  for (const auto& t : seed.tropes) trope_set.insert(point_string(t));
  rec.equal("distinct nodes", 16, node_set.size());
  rec.equal("singular orbit points", 16, singular);
  rec.equal("distinct tropes", 16, trope_set.size());
  bool rows_six = true, cols_six = true;
  for (int t = 0; t < 16; ++t) rows_six &= std::count(seed.incidence[t].begin(), seed.incidence[t].end(), true) == 6;
  for (int n = 0; n < 16; ++n) {
    int c = 0;
    for (int t = 0; t < 16; ++t) c += seed.incidence[t][n];
    cols_six &= c == 6;
  }
  rec.holds("six nodes on each trope", rows_six);
  rec.holds("six tropes through each node", cols_six);
  std::size_t squares = 0, smooth = 0;
  for (int t = 0; t < 16; ++t) {
    const TropeConic tc = trope_square(seed, t);
    squares += (tc.scale * tc.conic * tc.conic) == restrict_to_plane(seed.quartic, tc.plane);
    smooth += !det3(quadratic_form_matrix(tc.conic)).is_zero();
  }
  rec.equal("trope sections that are squares", 16, squares);
  rec.equal("smooth trope conics", 16, smooth);
}

// 6 ------------------------------------------------------------------------
void conic_construction(Recorder& rec, std::uint64_t) {
  const KummerSeed seed = build_seed(make_point(1, 2, 3, 4));
  const ConicSplitting s = construct_conics(seed, q0_param());
  rec.holds("X_u is smooth", sgn(singular_discriminant(s.u)) != 0);
  const ThirdIntersection back = third_intersection(s.u, q0_param());
  rec.holds("line through q0 and u meets S3 again at the seed parameter", back.point.same_point(seed.param));
  const MPoly fu = quartic_from(s.u);
  std::vector<MPoly> conics;
  std::set<std::string> planes;
  std::size_t divides = 0, smooth = 0;
  for (const auto& p : s.pairs) {
    planes.insert(point_string(p.plane));
    const MPoly section = restrict_to_plane(fu, p.plane);
    for (const MPoly* c : {&p.first, &p.second}) {
      conics.push_back(*c);
      divides += divide_exact(section, *c).has_value();
      smooth += !det3(quadratic_form_matrix(*c)).is_zero();
    }
  }
  std::size_t distinct = 0;
  for (std::size_t a = 0; a < conics.size(); ++a) {
    bool fresh = true;
    for (std::size_t b = 0; b < a; ++b)
      fresh &= !(s.pairs[a / 2].trope == s.pairs[b / 2].trope && proportionality_factor(conics[a], conics[b]));
    distinct += fresh;
  }
  rec.equal("conics", 32, conics.size());
  rec.equal("distinct conics", 32, distinct);
  rec.equal("conics dividing the plane section", 32, divides);
  rec.equal("smooth conics", 32, smooth);
  rec.equal("distinct planes", 16, planes.size());
  rec.holds("at most one quadratic extension", s.tower->height() <= 1);
}

// 7 ------------------------------------------------------------------------
void mukai(Recorder& rec, std::uint64_t) {
  const ParamU u = ParamU::from_ints({1, 2, 3, 5, 7, -18});
  rec.holds("sample member is smooth", sgn(singular_discriminant(u)) != 0);
  const MukaiSummary m = mukai_summary(u);
  std::size_t eight = 0, full_degree = 0;
  for (const auto& c : m.counts) {
    eight += c.total() == 8;
    full_degree += c.per_line[0] == 4 && c.per_line[1] == 4;
  }
  rec.equal("elements with 8 fixed points", 15, eight);
  rec.equal("elements with squarefree quartic restrictions on both lines", 15, full_degree);
  rec.equal("average trace", Rational(9), m.average);
  rec.equal("rank of the invariant part", Rational(7), m.invariant_rank);
}

// 8 ------------------------------------------------------------------------
void hessians(Recorder& rec, std::uint64_t seed) {
  const auto g = g_basis();
  const MPoly x = MPoly::variable(4, 0), y = MPoly::variable(4, 1), z = MPoly::variable(4, 2), w = MPoly::variable(4, 3);
  const MPoly xyzw2 = (x * y * z * w).pow(2);
  rec.holds("Fermat Hessian is 20736 (xyzw)^2", hessian_determinant(g[0]) == FieldElement(20736) * xyzw2);
  std::size_t axes = 0;
  for (int k = 0; k < 5; ++k) {
    std::array<Rational, 5> lambda{};
    lambda[k] = 1;
    const MPoly h = hessian_determinant(quartic_from(ParamABCDE(lambda)));
    axes += proportionality_factor(h, xyzw2).has_value();
  }
  rec.equal("axis parameters with Hessian proportional to (xyzw)^2", 5, axes);
  const std::array<std::array<MPoly, 2>, 3> parts{{{x * y, z * w}, {x * z, y * w}, {x * w, y * z}}};
  std::size_t split = 0;
  for (int k = 0; k < 3; ++k) {
    const auto q = split_sum_of_squares(parts[k][0], parts[k][1]);
    split += FieldElement(2) * q[0] * q[1] == g[k + 1];
  }
  rec.equal("B, C, D axis surfaces split into two quadrics over Q(i)", 3, split);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-5, 5);
  const auto mons = monomials_of_degree(4, 4);
  bool covariant = true;
  for (int s = 0; s < 3; ++s) {
    MPoly f(4);
    for (const auto& e : mons) f += MPoly::monomial(4, e, FieldElement(d(rng)));
    const PolyMatrix4 hf = hessian_matrix(f);
    const MPoly det = poly_det4(hf);
    for (auto gen : {Generator::sigma1, Generator::sigma2, Generator::tau1, Generator::tau2}) {
      const IntMatrix4 t = generator_matrix(gen);
      const MPoly moved = compose(f, t);
      covariant &= hessian_matrix(moved) == transported_hessian(hf, t);
      covariant &= hessian_determinant(moved) == compose(det, t);
    }
  }
  rec.holds("Hessian covariance under the generators (random quartics)", covariant);
  const MPoly fu = quartic_from(random_param(rng));
  rec.holds("Hessian of an invariant quartic is invariant", is_h22_invariant(hessian_determinant(fu)));
}

// 9 ------------------------------------------------------------------------
void igusa(Recorder& rec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool constant = true;
  std::vector<Point> points;
  for (int s = 0; s < 20; ++s) points.push_back(random_point(rng));
  for (const auto& p : points) {
    const auto a = igusa_map(p);
    for (const auto g : all_labels()) constant &= igusa_map(transform_point(lift(g), p)) == a;
  }
  rec.holds("Igusa map constant on H-orbits of 20 random points", constant);
  const IgusaRelation r = igusa_relation(80, seed);
  rec.equal("kernel dimension", 1, r.kernel_dimension);
  const MPoly rel = r.polynomial();
  std::size_t vanish = 0;
  for (int s = 0; s < 20; ++s) {
    const auto a = igusa_map(random_point(rng));
    vanish += rel.evaluate(std::vector<FieldElement>(a.begin(), a.end())).is_zero();
  }
  rec.equal("relation vanishes at fresh points", 20, vanish);
  rec.equal("relation degree", 4, rel.total_degree());
}

// 10 -----------------------------------------------------------------------
void configuration(Recorder& rec, std::uint64_t) {
  const IncidenceSet s = incidence_set();
  rec.equal("|S|", 10, s.members.size());
  rec.holds("identity not in S", !s.contains(GroupLabel(0)));
  const auto conics = reducible_conics();
  rec.equal("reducible conics", 160, conics.size());
  std::array<int, 16> per_a{}, per_b{};
  for (const auto& c : conics) {
    ++per_a[c.a.index()];
    ++per_b[c.b.index()];
  }
  rec.holds("each line in 10 reducible conics",
            std::all_of(per_a.begin(), per_a.end(), [](int v) { return v == 10; }) &&
                std::all_of(per_b.begin(), per_b.end(), [](int v) { return v == 10; }));
  const ConicStatistics st = conic_statistics();
  const std::map<long, int> self_expected{{0, 6}, {2, 9}}, cross_expected{{0, 4}, {1, 8}, {2, 4}};
  std::size_t self_ok = 0, cross_ok = 0;
  for (const auto& p : st.self) self_ok += p.distribution == self_expected;
  for (const auto& p : st.cross) cross_ok += p.distribution == cross_expected;
  rec.equal("orbits", 20, st.orbits.size());
  rec.equal("C.gC distribution of the first orbit", "{0:6, 2:9}", distribution_string(st.self.front().distribution));
  rec.equal("orbits with C.gC distribution {0:6, 2:9}", 20, self_ok);
  rec.holds("some orbit pair has C.gD distribution {0:4, 1:8, 2:4}", cross_ok > 0);
  rec.equal("orbit pairs with that distribution", "180 of 190", str(cross_ok) + " of " + str(st.cross.size()));
  const SubmatrixResult m = submatrix_M();
  rec.equal("frozen convention", "1-based a-major", m.variant.name());
  rec.holds("M reproduced entry for entry", m.matrix == reference_matrix());
  rec.equal("det M", -512, m.det);
}

// 11 -----------------------------------------------------------------------
void lattice_chain(Recorder& rec, std::uint64_t, double& enumeration_seconds) {
  const GramLattice lam = lambda15();
  rec.equal("det Lambda15", 512, det_exact(lam.gram()));
  rec.holds("Lambda15 even", is_even(lam.gram()));
  const Signature sl = signature(lam.gram());
  rec.equal("Lambda15 signature", "(15,0)", "(" + str(sl.positive) + "," + str(sl.negative) + ")");
  const IntegerMatrix m = submatrix_M().matrix;
  rec.equal("det M", -512, det_exact(m));
  rec.holds("M even", is_even(m));
  const Signature sm = signature(m);
  rec.equal("M signature", "(1,15)", "(" + str(sm.positive) + "," + str(sm.negative) + ")");
  const auto h = solve_integral(m, IntegerVector(16, Integer(2)));
  rec.holds("h integral in the conic basis", h.has_value());
  if (!h) return;
  rec.equal("h^2", 4, inner(m, *h, *h));
  bool degree_two = true;
  for (std::size_t i = 0; i < 16; ++i) {
    IntegerVector e(16, Integer(0));
    e[i] = 1;
    degree_two &= inner(m, *h, e) == 2;
  }
  rec.holds("h.c_i = 2 for all 16 conics", degree_two);
  const Sublattice perp = orth_complement(m, *h);
  rec.equal("rank of h-perp", 15, perp.basis.rows());
  rec.holds("h-perp saturated", is_saturated(perp.basis));
  bool orthogonal = true;
  for (std::size_t r = 0; r < perp.basis.rows(); ++r) {
    IntegerVector v(16);
    for (std::size_t c = 0; c < 16; ++c) v[c] = perp.basis(r, c);
    orthogonal &= sgn(inner(m, v, *h)) == 0;
  }
  rec.holds("basis orthogonal to h", orthogonal);
  rec.equal("det h-perp", -512, det_exact(perp.gram));
  const GramLattice omega = GramLattice(perp.gram).negated();
  rec.equal("det of negated h-perp", det_exact(lam.gram()), det_exact(omega.gram()));
  rec.equal("negated h-perp even", str(is_even(lam.gram())), str(is_even(omega.gram())));
  const Signature so = signature(omega.gram());
  rec.equal("negated h-perp signature", "(15,0)", "(" + str(so.positive) + "," + str(so.negative) + ")");
  const auto start = Clock::now();
  const auto counts_lam = norm_counts(lam.gram(), 6);
  const auto counts_omega = norm_counts(omega.gram(), 6);
  enumeration_seconds = elapsed(start);
  auto minimum = [](const std::map<long, std::size_t>& c) {
    for (const auto& [k, v] : c)
      if (k > 0) return k;
    return 0L;
  };
  rec.equal("Lambda15 minimum norm", 4, minimum(counts_lam));
  rec.equal("negated h-perp minimum norm", minimum(counts_lam), minimum(counts_omega));
  auto count_at = [](const std::map<long, std::size_t>& c, long k) {
    const auto it = c.find(k);
    return it == c.end() ? std::size_t{0} : it->second;
  };
  rec.equal("vectors of norm 4 (Lambda15 vs negated h-perp)", count_at(counts_lam, 4), count_at(counts_omega, 4));
  rec.equal("vectors of norm 6 (Lambda15 vs negated h-perp)", count_at(counts_lam, 6), count_at(counts_omega, 6));
  Matrix<Rational> rows(16, 16);
  for (std::size_t c = 0; c < 16; ++c) rows(0, c) = (*h)[c];
  for (std::size_t r = 0; r < 15; ++r)
    for (std::size_t c = 0; c < 16; ++c) rows(r + 1, c) = perp.basis(r, c);
  IntegerMatrix sum_gram(16, 16);
  sum_gram(0, 0) = 4;
  for (std::size_t r = 0; r < 15; ++r)
    for (std::size_t c = 0; c < 15; ++c) sum_gram(r + 1, c + 1) = perp.gram(r, c);
  rec.equal("disc(Zh + h-perp)", -2048, det_exact(sum_gram));
  rec.equal("disc ratio", 4, det_exact(sum_gram) / det_exact(m));
  rec.equal("index of Zh + h-perp", 2, sublattice_index(m, rows));
}

// 12 -----------------------------------------------------------------------
void fermat(Recorder& rec, std::uint64_t) {
  const FermatLines f = fermat_lines();
  rec.equal("lines", 48, f.lines.size());
  std::size_t on = 0;
  for (const auto& l : f.lines) on += line_on_surface(l, g_basis()[0]);
  rec.equal("lines on the Fermat quartic", 48, on);
  std::size_t distinct = 0;
  for (std::size_t a = 0; a < f.lines.size(); ++a) {
    bool fresh = true;
    for (std::size_t b = 0; b < a; ++b) fresh &= !(f.lines[a] == f.lines[b]);
    distinct += fresh;
  }
  rec.equal("distinct lines", 48, distinct);
  rec.equal("Gram rank", 20, f.rank);
  rec.equal("field", "Q(sqrt(-1))(sqrt(2))", f.tower->describe());
}

}  // namespace

bool CriterionResult::checks_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool CriterionResult::within_time_limit() const {
  if (enumeration_limit_seconds > 0)
    return enumeration_seconds <= enumeration_limit_seconds && seconds - enumeration_seconds <= limit_seconds;
  return seconds <= limit_seconds;
}

bool RunReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.pass(); });
}

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list{
      {1, "group", "group structure", 1},          {2, "fixlines", "fix lines", 5},
      {3, "tetrahedra", "tetrahedra and quadrics", 30}, {4, "params", "parameter maps", 1},
      {5, "kummer", "Kummer seed", 60},             {6, "conics", "conic construction", 60},
      {7, "mukai", "fixed points and Mukai count", 10}, {8, "hessian", "Hessians", 10},
      {9, "igusa", "Igusa map and relation", 30},   {10, "config", "configuration model", 10},
      {11, "lattice", "lattice chain", 10},         {12, "fermat", "Fermat lines", 10}};
  return list;
}

CriterionResult run_criterion(int number, std::uint64_t seed) {
  const auto& list = criteria();
  const auto it = std::find_if(list.begin(), list.end(), [&](const CriterionInfo& c) { return c.number == number; });
  if (it == list.end()) throw std::invalid_argument("no criterion " + std::to_string(number));
  CriterionResult r;
  r.number = number;
  r.key = it->key;
  r.title = it->title;
  r.limit_seconds = it->limit_seconds;
  Recorder rec(r);
  const std::uint64_t local_seed = seed + static_cast<std::uint64_t>(number);
  const auto start = Clock::now();
  try {
    switch (number) {
      case 1: group_structure(rec, local_seed); break;
      case 2: fix_line_checks(rec, local_seed); break;
      case 3: tetrahedra_quadrics(rec, local_seed); break;
      case 4: parameter_maps(rec, local_seed); break;
      case 5: kummer_seed(rec, local_seed); break;
      case 6: conic_construction(rec, local_seed); break;
      case 7: mukai(rec, local_seed); break;
      case 8: hessians(rec, local_seed); break;
      case 9: igusa(rec, local_seed); break;
      case 10: configuration(rec, local_seed); break;
      case 11:
        r.enumeration_limit_seconds = 600;
        lattice_chain(rec, local_seed, r.enumeration_seconds);
        break;
      case 12: fermat(rec, local_seed); break;
    }
  } catch (const std::exception& e) {
    rec.failed("completed without error", e.what());
  }
  r.seconds = elapsed(start);
  return r;
}

RunReport verify_all(const VerifyConfig& config) {
  std::set<int> selected;
  for (const auto& key : config.only) {
    const auto& list = criteria();
    const auto it = std::find_if(list.begin(), list.end(),
                                 [&](const CriterionInfo& c) { return c.key == key || std::to_string(c.number) == key; });
    if (it == list.end()) throw std::invalid_argument("unknown criterion '" + key + "'");
    selected.insert(it->number);
  }
  RunReport report;
  report.seed = config.seed;
  for (const auto& c : criteria())
    if (selected.empty() || selected.count(c.number)) report.criteria.push_back(run_criterion(c.number, config.seed));
  return report;
}

Json RunReport::to_json(bool include_timings) const {
  Json crit = Json::array();
  for (const auto& r : criteria) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back(Json{{"criterion", r.number}, {"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    Json entry{{"criterion", r.number}, {"name", r.key}, {"title", r.title}, {"pass", r.checks_pass()},
               {"time_limit_seconds", r.limit_seconds}, {"checks", checks}};
    if (include_timings) {
      entry["seconds"] = r.seconds;
      entry["within_time_limit"] = r.within_time_limit();
      if (r.enumeration_limit_seconds > 0) entry["enumeration_seconds"] = r.enumeration_seconds;
    }
    crit.push_back(entry);
  }
  Json out{{"subcommand", subcommand}, {"inputs", Json{{"seed", seed}}}, {"pass", std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.checks_pass(); })},
           {"criteria", crit}};
  return out;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass() ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.number << ' ' << r.key << ": " << r.title << " ("
     << std::fixed << std::setprecision(2) << r.seconds << " s, limit " << r.limit_seconds << " s";
  if (r.enumeration_limit_seconds > 0) os << ", enumeration " << r.enumeration_seconds << " s of " << r.enumeration_limit_seconds;
  os << ')';
  if (!r.checks_pass()) {
    for (const auto& c : r.checks)
      if (!c.pass) os << "\n       " << c.name << ": expected " << c.expected << ", got " << c.actual;
  } else if (!r.within_time_limit()) {
    os << "\n       over the time limit";
  }
  return os.str();
}

}  // namespace hq
