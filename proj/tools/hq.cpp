// hq: command line front end. Every subcommand prints a JSON report
// {subcommand, inputs, outputs, checks, pass}; matrices can also go to CSV.
// Exit status: 0 success, 1 failed check or computation error, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hq/conicconfig.hpp"
#include "hq/family.hpp"
#include "hq/heisgroup.hpp"
#include "hq/kleinlines.hpp"
#include "hq/kummer.hpp"
#include "hq/lattice.hpp"
#include "hq/serialize.hpp"
#include "hq/verify.hpp"

using namespace hq;

namespace {

struct Report {
  explicit Report(std::string name = {}) : subcommand(std::move(name)) {}
  std::string subcommand;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<Check> checks;
  std::optional<std::string> csv;

  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    checks.push_back({name, expected, actual, expected == actual});
  }
  void check(const std::string& name, long expected, long actual) {
    check(name, std::to_string(expected), std::to_string(actual));
  }
  void holds(const std::string& name, bool value) { check(name, "true", value ? "true" : "false"); }
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  Json to_json() const {
    Json c = Json::array();
    for (const auto& x : checks)
      c.push_back(Json{{"name", x.name}, {"expected", x.expected}, {"actual", x.actual}, {"pass", x.pass}});
    return Json{{"subcommand", subcommand}, {"inputs", inputs}, {"outputs", outputs}, {"checks", c}, {"pass", pass()}};
  }
};

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Point parse_point(const std::string& text) {
  const auto v = parse_rationals(text);
  if (v.size() != 4) throw std::invalid_argument("a point needs four coordinates: " + text);
  Point p;
  for (int k = 0; k < 4; ++k) p[k] = FieldElement(v[k]);
  if (std::all_of(p.begin(), p.end(), [](const FieldElement& c) { return c.is_zero(); }))
    throw std::invalid_argument("the zero vector is not a point");
  return p;
}

LineCoords parse_line_coords(const std::string& text) {
  const auto v = parse_rationals(text);
  if (v.size() != 6) throw std::invalid_argument("line coordinates need six entries: " + text);
  LineCoords x;
  for (int k = 0; k < 6; ++k) x[k] = FieldElement(v[k]);
  return x;
}

Json matrix_json(const IntMatrix4& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(Json(std::vector<int>(row.begin(), row.end())));
  return out;
}

Json fix_line_json(const FixLine& l) {
  return Json{{"owner", l.owner.name()},
              {"owner_index", l.owner.index()},
              {"eigenvalue", to_json(l.eigenvalue)},
              {"points", Json::array({to_json(l.line.first()), to_json(l.line.second())})},
              {"klein", to_json(normalized(klein_of(l.line)))}};
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k + 1));
  return out;
}

IntegerMatrix from_long(const std::vector<std::vector<long>>& rows) { return integer_matrix(rows); }

// ---------------------------------------------------------------------------

Report cmd_fixlines() {
  Report r{"fixlines"};
  const auto lines = all_fix_lines();
  Json list = Json::array();
  for (const auto& l : lines) list.push_back(fix_line_json(l));
  r.outputs["lines"] = list;
  IntegerMatrix meet(lines.size(), lines.size());
  std::vector<std::string> labels;
  std::size_t agree = 0, pairs = 0;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    labels.push_back(lines[a].owner.name() + (a % 2 ? "#2" : "#1"));
    for (std::size_t b = 0; b < lines.size(); ++b) {
      const bool m = a != b && lines_meet(lines[a].line, lines[b].line);
      meet(a, b) = m ? 1 : 0;
      if (lines[a].owner == lines[b].owner) continue;
      ++pairs;
      agree += m == (symplectic_form(lines[a].owner, lines[b].owner) == 0);
    }
  }
  r.csv = to_csv(meet, labels);
  r.check("fix lines", 30, static_cast<long>(lines.size()));
  r.check("line pairs where meeting matches commuting", static_cast<long>(pairs), static_cast<long>(agree));
  return r;
}

Report cmd_planes() {
  Report r{"planes"};
  const PlaneClassification pc = classify_planes();
  const auto t_points = s6_orbit(t0_param());
  const auto nodes = s6_orbit(q0_param());
  Json tetra = Json::array();
  std::size_t matched_t = 0, matched_q = 0;
  for (const auto& p : pc.isotropic) {
    const Tetrahedron te = tetrahedron_of(p);
    Json vertices = Json::array(), faces = Json::array();
    for (const auto& v : te.vertices) vertices.push_back(to_json(v));
    for (const auto& f : te.faces) faces.push_back(to_json(f));
    const auto u = match_parameter(te.face_product, t_points);
    matched_t += u.has_value();
    tetra.push_back(Json{{"plane", p.name()}, {"vertices", vertices}, {"faces", faces},
                         {"face_product", te.face_product.to_string()},
                         {"parameter", u ? Json(u->to_string()) : Json(nullptr)}});
  }
  Json quadrics = Json::array();
  for (const auto& [a, b] : pc.orthogonal_pairs) {
    const FundamentalQuadric q = quadric_of(a, b);
    const auto u = match_parameter(q.form * q.form, nodes);
    matched_q += u.has_value();
    quadrics.push_back(Json{{"planes", Json::array({a.name(), b.name()})}, {"quadric", q.form.to_string()},
                            {"parameter", u ? Json(u->to_string()) : Json(nullptr)}});
  }
  r.outputs = Json{{"tetrahedra", tetra}, {"quadrics", quadrics}};
  r.check("tetrahedra", 15, static_cast<long>(pc.isotropic.size()));
  r.check("face products matching a T-point", 15, static_cast<long>(matched_t));
  r.check("fundamental quadrics", 10, static_cast<long>(pc.orthogonal_pairs.size()));
  r.check("squared quadrics matching a Segre node", 10, static_cast<long>(matched_q));
  return r;
}

Report cmd_group() {
  Report r{"group"};
  const GroupTable t = enumerate_group();
  Json labels = Json::array();
  for (const auto g : t.labels) labels.push_back(Json{{"index", g.index()}, {"name", g.name()}, {"lift", matrix_json(lift(g))}});
  Json center = Json::array();
  for (const auto& m : t.center) center.push_back(matrix_json(m));
  std::vector<std::vector<int>> form;
  for (const auto g : all_labels()) {
    std::vector<int> row;
    for (const auto h : all_labels()) row.push_back(symplectic_form(g, h));
    form.push_back(row);
  }
  r.outputs = Json{{"order", t.elements.size()}, {"center", center}, {"commutator_subgroup_order", t.commutators.size()},
                   {"labels", labels}, {"commutator_form", form}};
  const PlaneClassification pc = classify_planes();
  Json iso = Json::array(), aniso = Json::array();
  for (const auto& p : pc.isotropic) iso.push_back(p.name());
  for (const auto& p : pc.anisotropic) aniso.push_back(p.name());
  r.outputs["planes"] = Json{{"isotropic", iso}, {"anisotropic", aniso}};
  r.check("order", 32, static_cast<long>(t.elements.size()));
  r.check("center", 2, static_cast<long>(t.center.size()));
  r.check("rank of the commutator form", 4, f2_rank(form));
  r.check("isotropic planes", 15, static_cast<long>(pc.isotropic.size()));
  r.check("anisotropic planes", 20, static_cast<long>(pc.anisotropic.size()));
  // Fix lines, tetrahedra and quadrics come from the same builders as their
  // own subcommands.
  for (Report part : {cmd_fixlines(), cmd_planes()}) {
    for (auto& [key, value] : part.outputs.items()) r.outputs[key] = value;
    r.checks.insert(r.checks.end(), part.checks.begin(), part.checks.end());
  }
  r.outputs["fix_lines"] = r.outputs["lines"];
  r.outputs.erase("lines");
  return r;
}

Report cmd_discriminant(const std::string& text) {
  Report r{"discriminant"};
  const ParamU u = parse_param_u(text);
  r.inputs["u"] = to_json(u);
  const Rational d = singular_discriminant(u);
  r.outputs = Json{{"discriminant", to_json(d)},
                   {"singular", sgn(d) == 0},
                   {"segre_value", to_json(segre_value(u))},
                   {"on_segre_cubic", segre_membership(u)},
                   {"segre_node", is_segre_singular(u)},
                   {"nieto_value", to_json(nieto_value(u))},
                   {"on_nieto_quintic", nieto_membership(u)},
                   {"nieto_singular", is_nieto_singular(u)},
                   {"abcde", u_to_abcde(u).to_string()}};
  return r;
}

Report cmd_loci(const std::string& which) {
  Report r{"loci"};
  r.inputs["list"] = which;
  const bool nodes = which == "segre-nodes";
  const auto orbit = s6_orbit(nodes ? q0_param() : t0_param());
  Json list = Json::array();
  std::size_t on_segre = 0, singular = 0;
  for (const auto& u : orbit) {
    list.push_back(u.to_string());
    on_segre += segre_membership(u);
    singular += is_segre_singular(u);
  }
  r.outputs["points"] = list;
  r.check("points", nodes ? 10 : 15, static_cast<long>(orbit.size()));
  r.check("points on the Segre cubic", static_cast<long>(orbit.size()), static_cast<long>(on_segre));
  if (nodes) r.check("nodes of the Segre cubic", 10, static_cast<long>(singular));
  return r;
}

Report cmd_igusa(std::size_t samples, std::uint64_t seed) {
  Report r{"igusa-relation"};
  r.inputs = Json{{"samples", samples}, {"seed", seed}};
  const IgusaRelation rel = igusa_relation(samples, seed);
  const std::vector<std::string> names{"g0", "g1", "g2", "g3", "g4"};
  Json monos = Json::array(), coeffs = Json::array();
  for (const auto& e : rel.monomials) monos.push_back(std::vector<int>(e.begin(), e.begin() + 5));
  for (const auto& c : rel.coefficients) coeffs.push_back(to_json(c));
  r.outputs = Json{{"kernel_dimension", rel.kernel_dimension}, {"monomials", monos}, {"coefficients", coeffs},
                   {"relation", rel.polynomial().to_string(names)}};
  r.check("kernel dimension", 1, static_cast<long>(rel.kernel_dimension));
  return r;
}

Report cmd_hessian(const std::string& text) {
  Report r{"hessian"};
  const ParamU u = parse_param_u(text);
  r.inputs["u"] = to_json(u);
  const MPoly f = quartic_from(u);
  const MPoly h = hessian_determinant(f);
  const MPoly xyzw = MPoly::variable(4, 0) * MPoly::variable(4, 1) * MPoly::variable(4, 2) * MPoly::variable(4, 3);
  const auto factor = h.is_zero() ? std::nullopt : proportionality_factor(h, xyzw * xyzw);
  r.outputs = Json{{"quartic", f.to_string()}, {"hessian", to_json(h)},
                   {"proportional_to_xyzw_squared", factor.has_value()},
                   {"factor", factor ? to_json(*factor) : Json(nullptr)}};
  r.holds("Hessian is H22-invariant", is_h22_invariant(h));
  bool covariant = true;
  for (auto g : {Generator::sigma1, Generator::sigma2, Generator::tau1, Generator::tau2}) {
    const IntMatrix4 t = generator_matrix(g);
    covariant &= hessian_matrix(compose(f, t)) == transported_hessian(hessian_matrix(f), t);
  }
  r.holds("Hessian matrix covariant under the generators", covariant);
  return r;
}

Json seed_json(const KummerSeed& seed) {
  Json nodes = Json::array(), tropes = Json::array(), conics = Json::array();
  for (const auto& n : seed.nodes) nodes.push_back(to_json(n));
  for (const auto& t : seed.tropes) tropes.push_back(to_json(t));
  for (int t = 0; t < 16; ++t) {
    const TropeConic c = trope_square(seed, t);
    conics.push_back(Json{{"trope", t}, {"scale", to_json(c.scale)}, {"conic", c.conic.to_string()}, {"nodes", c.nodes_on}});
  }
  std::vector<std::vector<int>> inc;
  for (const auto& row : seed.incidence) inc.emplace_back(row.begin(), row.end());
  return Json{{"param", seed.param.to_string()}, {"quartic", seed.quartic.to_string()}, {"nodes", nodes},
              {"tropes", tropes}, {"incidence", inc}, {"trope_conics", conics}};
}

Report cmd_seed_kummer(const std::string& text) {
  Report r{"seed-kummer"};
  const Point p = parse_point(text);
  r.inputs["p"] = to_json(p);
  const KummerSeed seed = build_seed(p);
  r.outputs = seed_json(seed);
  r.holds("parameter on the Segre cubic", segre_membership(seed.param));
  bool six = true;
  for (int t = 0; t < 16; ++t) {
    int rows = 0, cols = 0;
    for (int n = 0; n < 16; ++n) {
      rows += seed.incidence[t][n];
      cols += seed.incidence[n][t];
    }
    six &= rows == 6 && cols == 6;
  }
  r.holds("16_6 incidence", six);
  std::size_t smooth = 0;
  for (int t = 0; t < 16; ++t) smooth += !det3(quadratic_form_matrix(trope_square(seed, t).conic)).is_zero();
  r.check("smooth trope conics", 16, static_cast<long>(smooth));
  IntegerMatrix inc(16, 16);
  for (int t = 0; t < 16; ++t)
    for (int n = 0; n < 16; ++n) inc(t, n) = seed.incidence[t][n] ? 1 : 0;
  r.csv = to_csv(inc, numbered("T", 16));
  return r;
}

Report cmd_conics(const std::string& p_text, const std::string& node_text, long t) {
  Report r{"conics"};
  const Point p = parse_point(p_text);
  const ParamU q = node_text == "q0" ? q0_param() : parse_param_u(node_text);
  r.inputs = Json{{"p", to_json(p)}, {"node", to_json(q)}, {"t", t}};
  const KummerSeed seed = build_seed(p);
  const ConicSplitting s = construct_conics(seed, q, t);
  const MPoly fu = quartic_from(s.u);
  Json pairs = Json::array();
  std::size_t divides = 0, smooth = 0;
  for (const auto& pr : s.pairs) {
    const MPoly section = restrict_to_plane(fu, pr.plane);
    for (const MPoly* c : {&pr.first, &pr.second}) {
      divides += divide_exact(section, *c).has_value();
      smooth += !det3(quadratic_form_matrix(*c)).is_zero();
    }
    pairs.push_back(Json{{"trope", pr.trope}, {"plane", to_json(pr.plane)}, {"mu_squared", to_json(pr.mu_squared)},
                         {"mu", to_json(pr.mu)}, {"first", to_json(pr.first)}, {"second", to_json(pr.second)}});
  }
  r.outputs = Json{{"u", s.u.to_string()}, {"alpha", to_json(s.alpha)}, {"beta", to_json(s.beta)},
                   {"field", s.tower->describe()}, {"tower", to_json(s.tower)}, {"pairs", pairs}};
  r.holds("X_u smooth", sgn(singular_discriminant(s.u)) != 0);
  r.check("conics dividing the plane section", 32, static_cast<long>(divides));
  r.check("smooth conics", 32, static_cast<long>(smooth));
  r.holds("at most one quadratic extension", s.tower->height() <= 1);
  return r;
}

Report cmd_klein(const std::vector<std::string>& points) {
  Report r{"klein"};
  if (points.size() != 2) throw std::invalid_argument("--from-points needs exactly two points");
  const Point a = parse_point(points[0]), b = parse_point(points[1]);
  r.inputs["points"] = Json::array({to_json(a), to_json(b)});
  const LineCoords p = plucker_from_points(a, b);
  const LineCoords x = klein_from_plucker(p);
  r.outputs = Json{{"plucker", to_json(p)}, {"klein", to_json(x)}, {"klein_normalized", to_json(normalized(x))},
                   {"klein_quadric", to_json(klein_quadric(x))}};
  if (std::none_of(x.begin(), x.end(), [](const FieldElement& c) { return c.is_zero(); })) {
    const LineCoords y = involution(x);
    r.outputs["involution"] = to_json(y);
    r.outputs["nieto_condition"] = to_json(nieto_line_condition(x));
  } else {
    r.outputs["involution"] = nullptr;
  }
  r.holds("Pluecker relation", plucker_relation(p).is_zero());
  r.holds("Klein quadric", klein_quadric(x).is_zero());
  r.holds("round trip to the line", line_from_klein(x) == Line::through(a, b));
  return r;
}

Report cmd_coplanar(const std::string& xs, const std::string& ys) {
  Report r{"coplanar"};
  const LineCoords x = parse_line_coords(xs), y = parse_line_coords(ys);
  r.inputs = Json{{"x", to_json(x)}, {"y", to_json(y)}};
  r.outputs = Json{{"pairing", to_json(klein_pairing(x, y))}, {"coplanar", coplanar(x, y)},
                   {"x_on_klein_quadric", klein_quadric(x).is_zero()}, {"y_on_klein_quadric", klein_quadric(y).is_zero()}};
  return r;
}

Report cmd_fermat() {
  Report r{"fermat-lines"};
  const FermatLines f = fermat_lines();
  Json lines = Json::array();
  std::size_t on = 0;
  for (const auto& l : f.lines) {
    lines.push_back(Json::array({to_json(l.first()), to_json(l.second())}));
    on += line_on_surface(l, g_basis()[0]);
  }
  r.outputs = Json{{"field", f.tower->describe()}, {"tower", to_json(f.tower)}, {"lines", lines}, {"gram_rank", f.rank}};
  r.csv = to_csv(from_long(f.gram), numbered("L", f.lines.size()));
  r.check("lines", 48, static_cast<long>(f.lines.size()));
  r.check("lines on the quartic", 48, static_cast<long>(on));
  r.check("Gram rank", 20, static_cast<long>(f.rank));
  return r;
}

Report cmd_config_matrix(bool full320, const std::string& submatrix) {
  Report r{"config-matrix"};
  r.inputs = Json{{"full320", full320}, {"submatrix", submatrix}};
  if (!submatrix.empty() && submatrix != "paper") throw std::invalid_argument("--submatrix accepts only 'paper'");
  if (full320 && !submatrix.empty()) throw std::invalid_argument("--full320 and --submatrix are exclusive");
  const IncidenceSet s = incidence_set();
  Json members = Json::array();
  for (const auto g : s.members) members.push_back(Json{{"index", g.index()}, {"name", g.name()}});
  const ConventionVariant frozen = frozen_variant();
  r.outputs = Json{{"incidence_set", members}, {"convention", frozen.name()}};
  if (!submatrix.empty()) {
    const SubmatrixResult m = submatrix_M();
    Json matching = Json::array();
    for (const auto& v : m.matching) matching.push_back(v.name());
    std::vector<std::string> labels;
    for (const auto& c : m.conics) labels.push_back(conic_label(c));
    r.outputs["matching_conventions"] = matching;
    r.outputs["ordinals"] = reference_ordinals();
    r.outputs["det"] = m.det.get_str();
    r.outputs["matrix"] = to_json(m.matrix);
    r.csv = to_csv(m.matrix, labels);
    r.holds("reference matrix reproduced", m.matrix == reference_matrix());
    r.check("det", "-512", m.det.get_str());
  } else if (full320) {
    const ConfigGram g = gram_full320(true);
    r.outputs["size"] = g.labels.size();
    r.csv = to_csv(g.gram, g.labels);
    r.holds("symmetric", g.gram.is_symmetric());
  } else {
    const auto conics = reducible_conics();
    std::vector<std::string> labels;
    for (const auto& c : conics) labels.push_back(conic_label(c));
    const IntegerMatrix n = gram_reducible();
    r.outputs["size"] = labels.size();
    r.csv = to_csv(n, labels);
    r.check("reducible conics", 160, static_cast<long>(conics.size()));
  }
  return r;
}

Report cmd_lattice(const std::string& from) {
  Report r{"lattice-invariants"};
  r.inputs["from"] = from;
  IntegerMatrix g;
  std::vector<std::string> labels;
  if (from == "lambda15") {
    const GramLattice l = lambda15();
    g = l.gram();
    labels = l.labels();
  } else if (from == "paperM") {
    g = submatrix_M().matrix;
    labels = numbered("c", 16);
  } else {
    std::ifstream in(from);
    if (!in) throw std::invalid_argument("cannot read " + from);
    std::stringstream ss;
    ss << in.rdbuf();
    const LabeledMatrix m = parse_csv_matrix(ss.str());
    g = m.matrix;
    labels = m.labels;
  }
  const GramLattice lat(g, labels);
  const Integer det = det_exact(g);
  r.outputs = Json{{"rank", lat.rank()}, {"matrix_rank", rank_exact(g)}, {"det", det.get_str()}, {"even", is_even(g)}};
  if (sgn(det) != 0) {
    const Signature s = signature(g);
    r.outputs["signature"] = Json::array({s.positive, s.negative});
    std::optional<long> minimum;
    if (s.negative == 0) minimum = minimum_norm(g);
    if (s.positive == 0) minimum = minimum_norm(lat.negated().gram());
    r.outputs["minimum"] = minimum ? Json(*minimum) : Json(nullptr);
    if (s.positive == 0 && minimum) r.outputs["minimum_of"] = "negated form";
  } else {
    r.outputs["signature"] = nullptr;
  }
  Json index_checks = Json::object();
  if (from == "paperM") {
    const auto h = solve_integral(g, IntegerVector(g.rows(), Integer(2)));
    r.holds("h integral", h.has_value());
    if (h) {
      std::vector<std::string> hs;
      for (const auto& c : *h) hs.push_back(c.get_str());
      const Sublattice perp = orth_complement(g, *h);
      Matrix<Rational> rows(16, 16);
      for (std::size_t c = 0; c < 16; ++c) rows(0, c) = (*h)[c];
      for (std::size_t k = 0; k < 15; ++k)
        for (std::size_t c = 0; c < 16; ++c) rows(k + 1, c) = perp.basis(k, c);
      const Integer index = sublattice_index(g, rows);
      index_checks = Json{{"h", hs},
                          {"h_squared", inner(g, *h, *h).get_str()},
                          {"perp_det", det_exact(perp.gram).get_str()},
                          {"perp_saturated", is_saturated(perp.basis)},
                          {"index_of_Zh_plus_perp", index.get_str()}};
      r.check("h^2", "4", inner(g, *h, *h).get_str());
      r.check("det h-perp", "-512", det_exact(perp.gram).get_str());
      r.check("index", "2", index.get_str());
    }
    r.check("det", "-512", det.get_str());
  }
  if (from == "lambda15") {
    r.check("det", "512", det.get_str());
    r.holds("even", is_even(g));
  }
  r.outputs["index_checks"] = index_checks;
  return r;
}

// ---------------------------------------------------------------------------

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int emit(const Report& r, const std::string& json_path, const std::string& csv_path, double seconds, bool timings) {
  Json j = r.to_json();
  if (timings) j["wall_time_seconds"] = seconds;
  const std::string text = j.dump(2) + "\n";
  if (json_path.empty()) std::cout << text;
  else write_text(json_path, text);
  if (!csv_path.empty()) {
    if (!r.csv) throw std::invalid_argument("subcommand " + r.subcommand + " produces no matrix for --csv");
    write_text(csv_path, *r.csv);
  }
  for (const auto& c : r.checks)
    if (!c.pass) std::cerr << "check failed: " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for Heisenberg-invariant quartic surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path, csv_path;
  bool timings = false;
  app.add_option("--json", json_path, "write the JSON report to PATH instead of stdout");
  app.add_option("--csv", csv_path, "write the matrix output as CSV to PATH");
  app.add_flag("--timings", timings, "include wall times in the report");

  auto* group = app.add_subcommand("group", "the group H22 and its quotient H");
  auto* fixlines = app.add_subcommand("fixlines", "the 30 fix lines");
  auto* planes = app.add_subcommand("planes", "tetrahedra and fundamental quadrics");
  std::string u_text;
  auto* discriminant = app.add_subcommand("discriminant", "singularity discriminant and loci membership");
  discriminant->add_option("--u", u_text, "parameter u0,...,u5 with sum 0")->required();
  std::string loci_list;
  auto* loci = app.add_subcommand("loci", "special points of the parameter space");
  loci->add_option("--list", loci_list)->required()->check(CLI::IsMember({"segre-nodes", "t-points"}));
  std::size_t samples = 80;
  std::uint64_t seed = 1234567;
  auto* igusa = app.add_subcommand("igusa-relation", "quartic relation among g0..g4");
  igusa->add_option("--samples", samples)->check(CLI::Range(70, 10000));
  igusa->add_option("--seed", seed);
  auto* hessian = app.add_subcommand("hessian", "Hessian of F_u");
  hessian->add_option("--u", u_text, "parameter u0,...,u5 with sum 0")->required();
  std::string p_text, node_text = "q0";
  long t = 1;
  auto* seedk = app.add_subcommand("seed-kummer", "Kummer surface singular at p and its orbit");
  seedk->add_option("--p", p_text, "rational point x,y,z,w")->required();
  auto* conics = app.add_subcommand("conics", "32 conics on a smooth member through a Segre node");
  conics->add_option("--p", p_text, "rational point x,y,z,w")->required();
  conics->add_option("--node", node_text, "Segre node: q0 or u0,...,u5");
  conics->add_option("--t", t, "first line parameter to try");
  std::vector<std::string> points;
  auto* klein = app.add_subcommand("klein", "Pluecker and Klein coordinates of a line");
  klein->add_option("--from-points", points, "two points x,y,z,w")->required()->expected(2);
  std::string x_text, y_text;
  auto* copl = app.add_subcommand("coplanar", "coplanarity of two lines in Klein coordinates");
  copl->add_option("--x", x_text)->required();
  copl->add_option("--y", y_text)->required();
  auto* fermat = app.add_subcommand("fermat-lines", "the 48 lines on the Fermat quartic");
  bool full320 = false;
  std::string submatrix;
  auto* config = app.add_subcommand("config-matrix", "intersection matrices of the conic configuration");
  config->add_flag("--full320", full320, "include complements and h");
  config->add_option("--submatrix", submatrix, "'paper' selects the reference 16x16 submatrix")
      ->check(CLI::IsMember({"paper"}));
  std::string from;
  auto* lattice = app.add_subcommand("lattice-invariants", "invariants of an integral lattice");
  lattice->add_option("--from", from, "lambda15, paperM or a CSV file")->required();
  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  verify->add_option("--only", only, "criterion keys or numbers");
  verify->add_option("--seed", seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    if (verify->parsed()) {
      const RunReport report = verify_all(VerifyConfig{only, seed});
      for (const auto& c : report.criteria) std::cerr << summary_line(c) << "\n";
      const std::string text = report.to_json(timings).dump(2) + "\n";
      if (json_path.empty()) std::cout << text;
      else write_text(json_path, text);
      return report.pass() ? 0 : 1;
    }
    Report r;
    if (group->parsed()) r = cmd_group();
    else if (fixlines->parsed()) r = cmd_fixlines();
    else if (planes->parsed()) r = cmd_planes();
    else if (discriminant->parsed()) r = cmd_discriminant(u_text);
    else if (loci->parsed()) r = cmd_loci(loci_list);
    else if (igusa->parsed()) r = cmd_igusa(samples, seed);
    else if (hessian->parsed()) r = cmd_hessian(u_text);
    else if (seedk->parsed()) r = cmd_seed_kummer(p_text);
    else if (conics->parsed()) r = cmd_conics(p_text, node_text, t);
    else if (klein->parsed()) r = cmd_klein(points);
    else if (copl->parsed()) r = cmd_coplanar(x_text, y_text);
    else if (fermat->parsed()) r = cmd_fermat();
    else if (config->parsed()) r = cmd_config_matrix(full320, submatrix);
    else if (lattice->parsed()) r = cmd_lattice(from);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(r, json_path, csv_path, seconds, timings);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
