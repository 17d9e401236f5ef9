#include "hq/family.hpp"

#include "hq/heisgroup.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hq {

namespace {

template <std::size_t N>
std::string tuple_string(const std::array<Rational, N>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < N; ++k) os << (k ? "," : "") << v[k].get_str();
  os << ")";
  return os.str();
}

MPoly var(int k) { return MPoly::variable(4, k); }

}  // namespace

ParamABCDE::ParamABCDE(std::array<Rational, 5> values) : values_(std::move(values)) {
  if (std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return sgn(q) == 0; }))
    throw std::invalid_argument("(A,B,C,D,E) must not vanish");
}

std::string ParamABCDE::to_string() const { return tuple_string(values_); }

ParamU::ParamU(std::array<Rational, 6> values) : values_(std::move(values)) {
  Rational sum = 0;
  bool nonzero = false;
  for (const auto& q : values_) {
    sum += q;
    nonzero = nonzero || sgn(q) != 0;
  }
  if (!nonzero) throw std::invalid_argument("u must not vanish");
  if (sgn(sum) != 0) throw std::invalid_argument("u must satisfy u0+...+u5 = 0");
}

ParamU ParamU::from_ints(std::array<long, 6> values) {
  std::array<Rational, 6> q;
  for (int k = 0; k < 6; ++k) q[k] = values[k];
  return ParamU(q);
}

ParamU ParamU::normalized() const {
  for (const auto& q : values_) {
    if (sgn(q) != 0) {
      std::array<Rational, 6> out;
      for (int k = 0; k < 6; ++k) out[k] = values_[k] / q;
      return ParamU(out);
    }
  }
  throw std::logic_error("zero parameter");
}

std::string ParamU::to_string() const { return tuple_string(values_); }

ParamU parse_param_u(const std::string& text) {
  std::array<Rational, 6> values;
  std::stringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 6) throw std::invalid_argument("u needs exactly six coordinates");
    values[k++] = parse_rational(item);
  }
  if (k != 6) throw std::invalid_argument("u needs exactly six coordinates");
  return ParamU(values);
}

ParamU q0_param() { return ParamU::from_ints({1, 1, 1, -1, -1, -1}); }
ParamU t0_param() { return ParamU::from_ints({1, -1, 0, 0, 0, 0}); }

std::array<MPoly, 5> g_basis() {
  const MPoly x = var(0), y = var(1), z = var(2), w = var(3);
  const FieldElement two(2), four(4);
  return {x.pow(4) + y.pow(4) + z.pow(4) + w.pow(4),
          two * (x * x * y * y + z * z * w * w),
          two * (x * x * z * z + y * y * w * w),
          two * (x * x * w * w + y * y * z * z),
          four * (x * y * z * w)};
}

std::array<MPoly, 6> t_basis() {
  const auto g = g_basis();
  const FieldElement third(Rational(1, 3)), two_thirds(Rational(2, 3)), two(2);
  const MPoly a = third * g[0];
  return {a - g[1] - g[2] - g[3], a - g[1] + g[2] + g[3], a + g[1] - g[2] + g[3],
          a + g[1] + g[2] - g[3], two * g[4] - two_thirds * g[0], -(two_thirds * g[0]) - two * g[4]};
}

ParamABCDE u_to_abcde(const ParamU& u) {
  return ParamABCDE({-u[4] - u[5], -u[0] - u[1] + u[2] + u[3], -u[0] + u[1] - u[2] + u[3],
                     -u[0] + u[1] + u[2] - u[3], 2 * u[4] - 2 * u[5]});
}

ParamU abcde_to_u(const ParamABCDE& l) {
  return ParamU({l[0] - l[1] - l[2] - l[3], l[0] - l[1] + l[2] + l[3], l[0] + l[1] - l[2] + l[3],
                 l[0] + l[1] + l[2] - l[3], -2 * l[0] + l[4], -2 * l[0] - l[4]});
}

MPoly quartic_from(const ParamABCDE& lambda) {
  const auto g = g_basis();
  MPoly f(4);
  for (int k = 0; k < 5; ++k) f += FieldElement(lambda[k]) * g[k];
  return f;
}

MPoly quartic_from(const ParamU& u) {
  const auto t = t_basis();
  MPoly f(4);
  for (int k = 0; k < 6; ++k) f += FieldElement(u[k]) * t[k];
  return f;
}

std::optional<std::array<FieldElement, 5>> abcde_of(const MPoly& f) {
  if (f.nvars() != 4) return std::nullopt;
  // The g_k have disjoint supports; read one monomial of each.
  const std::array<Exponent, 5> probes{Exponent{4, 0, 0, 0}, Exponent{2, 2, 0, 0}, Exponent{2, 0, 2, 0},
                                       Exponent{2, 0, 0, 2}, Exponent{1, 1, 1, 1}};
  const std::array<long, 5> weights{1, 2, 2, 2, 4};
  const auto g = g_basis();
  std::array<FieldElement, 5> lambda;
  MPoly rebuilt(4);
  for (int k = 0; k < 5; ++k) {
    lambda[k] = f.coefficient(probes[k]) / FieldElement(weights[k]);
    rebuilt += lambda[k] * g[k];
  }
  if (!(rebuilt == f)) return std::nullopt;
  return lambda;
}

ParamU s6_action(const Permutation6& sigma, const ParamU& u) {
  std::array<bool, 6> hit{};
  std::array<Rational, 6> out;
  for (int i = 0; i < 6; ++i) {
    const int j = sigma[i];
    if (j < 0 || j >= 6 || hit[j]) throw std::invalid_argument("not a permutation of six letters");
    hit[j] = true;
    out[j] = u[i];
  }
  return ParamU(out);
}

std::vector<Permutation6> all_permutations6() {
  Permutation6 p{0, 1, 2, 3, 4, 5};
  std::vector<Permutation6> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<ParamU> s6_orbit(const ParamU& u) {
  std::vector<ParamU> orbit;
  for (const auto& p : all_permutations6()) orbit.push_back(s6_action(p, u).normalized());
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

Rational segre_value(const ParamU& u) {
  Rational s = 0;
  for (const auto& q : u.values()) s += q * q * q;
  return s;
}

bool segre_membership(const ParamU& u) { return sgn(segre_value(u)) == 0; }

Rational singular_discriminant(const ParamU& u) {
  Rational d = segre_value(u);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) d *= u[i] + u[j];
  return d;
}

namespace {

// Elementary symmetric function of degree `degree` in the entries other than `skip`.
Rational elementary(const std::array<Rational, 6>& u, int degree, int skip) {
  std::vector<Rational> e(degree + 1, Rational(0));
  e[0] = 1;
  for (int k = 0; k < 6; ++k) {
    if (k == skip) continue;
    for (int d = degree; d >= 1; --d) e[d] += e[d - 1] * u[k];
  }
  return e[degree];
}

bool all_equal(const std::array<Rational, 6>& v) {
  return std::all_of(v.begin(), v.end(), [&](const Rational& q) { return q == v[0]; });
}

}  // namespace

Rational nieto_value(const ParamU& u) { return elementary(u.values(), 5, -1); }

bool nieto_membership(const ParamU& u) { return sgn(nieto_value(u)) == 0; }

bool is_segre_singular(const ParamU& u) {
  std::array<Rational, 6> grad;
  for (int k = 0; k < 6; ++k) grad[k] = 3 * u[k] * u[k];
  return segre_membership(u) && all_equal(grad);
}

bool is_nieto_singular(const ParamU& u) {
  std::array<Rational, 6> grad;
  for (int k = 0; k < 6; ++k) grad[k] = elementary(u.values(), 4, k);
  return nieto_membership(u) && all_equal(grad);
}

std::array<FieldElement, 5> igusa_map(const Point& p) {
  const auto g = g_basis();
  std::array<FieldElement, 5> out;
  bool nonzero = false;
  for (int k = 0; k < 5; ++k) {
    out[k] = g[k].evaluate(p);
    nonzero = nonzero || !out[k].is_zero();
  }
  if (!nonzero) throw std::logic_error("the invariant quartics have a common zero");
  return out;
}

MPoly IgusaRelation::polynomial() const {
  MPoly f(5);
  for (std::size_t k = 0; k < coefficients.size(); ++k) f.add_term(monomials[k], FieldElement(coefficients[k]));
  return f;
}

IgusaRelation igusa_relation(std::size_t samples, std::uint64_t seed) {
  IgusaRelation rel;
  rel.samples = samples;
  rel.seed = seed;
  rel.monomials = monomials_of_degree(5, 4);

  const auto g = g_basis();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-12, 12);
  Matrix<Rational> system(samples, rel.monomials.size());
  for (std::size_t s = 0; s < samples; ++s) {
    const Point p = make_point(coord(rng), coord(rng), coord(rng), coord(rng));
    std::array<std::array<Rational, 5>, 5> powers;
    for (int k = 0; k < 5; ++k) {
      // Evaluating at the zero point gives a zero row, which is harmless.
      const Rational v = g[k].evaluate(p).to_rational();
      powers[k][0] = 1;
      for (int j = 1; j < 5; ++j) powers[k][j] = powers[k][j - 1] * v;
    }
    for (std::size_t m = 0; m < rel.monomials.size(); ++m) {
      Rational v = 1;
      for (int k = 0; k < 5; ++k) v *= powers[k][rel.monomials[m][k]];
      system(s, m) = v;
    }
  }
  const auto kernel = null_space(system);
  rel.kernel_dimension = kernel.size();
  if (kernel.size() == 1) {
    rel.coefficients = kernel[0];
    const auto lead = std::find_if(rel.coefficients.begin(), rel.coefficients.end(),
                                   [](const Rational& q) { return sgn(q) != 0; });
    const Rational scale = *lead;
    for (auto& q : rel.coefficients) q /= scale;
  }
  return rel;
}

PolyMatrix4 hessian_matrix(const MPoly& f) {
  PolyMatrix4 h;
  for (int i = 0; i < 4; ++i) {
    const MPoly fi = f.derivative(i);
    for (int j = 0; j < 4; ++j) h[i][j] = fi.derivative(j);
  }
  return h;
}

MPoly hessian_determinant(const MPoly& f) { return poly_det4(hessian_matrix(f)); }

PolyMatrix4 transported_hessian(const PolyMatrix4& h, const IntMatrix4& t) {
  PolyMatrix4 moved;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) moved[i][j] = compose(h[i][j], t);
  PolyMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      MPoly s(moved[0][0].nvars());
      for (int a = 0; a < 4; ++a) {
        if (t[a][i] == 0) continue;
        for (int b = 0; b < 4; ++b) {
          if (t[b][j] == 0) continue;
          s += FieldElement(static_cast<long>(t[a][i] * t[b][j])) * moved[a][b];
        }
      }
      out[i][j] = s;
    }
  return out;
}

bool is_h22_invariant(const MPoly& f) {
  for (auto g : {Generator::sigma1, Generator::sigma2, Generator::tau1, Generator::tau2}) {
    if (!(compose(f, generator_matrix(g)) == f)) return false;
  }
  return true;
}

std::optional<ParamU> match_parameter(const MPoly& f, const std::vector<ParamU>& candidates) {
  for (const auto& u : candidates) {
    if (proportionality_factor(f, quartic_from(u))) return u;
  }
  return std::nullopt;
}

std::array<MPoly, 2> split_sum_of_squares(const MPoly& a, const MPoly& b) {
  const FieldElement i = FieldElement::imaginary_unit();
  return {a + i * b, a - i * b};
}

}  // namespace hq
