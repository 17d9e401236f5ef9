#include "hq/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hq {

std::vector<Exponent> monomials_of_degree(int nvars, int degree) {
  if (nvars < 1 || nvars > kMaxVars || degree < 0) throw std::invalid_argument("bad monomial request");
  std::vector<Exponent> out;
  Exponent e{};
  // Distribute the degree over the variables, last variable takes the rest.
  auto fill = [&](auto& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = static_cast<std::uint8_t>(left);
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = static_cast<std::uint8_t>(k);
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  fill(fill, 0, degree);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (int k = 0; k < kMaxVars; ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

MPoly::MPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
}

MPoly MPoly::constant(int nvars, const FieldElement& c) {
  MPoly p(nvars);
  p.add_term(Exponent{}, c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Exponent e{};
  e[index] = 1;
  return monomial(nvars, e, FieldElement(1));
}

MPoly MPoly::monomial(int nvars, const Exponent& e, const FieldElement& c) {
  for (int k = nvars; k < kMaxVars; ++k) {
    if (e[k] != 0) throw std::invalid_argument("exponent uses a variable beyond nvars");
  }
  MPoly p(nvars);
  p.add_term(e, c);
  return p;
}

MPoly MPoly::linear_form(std::span<const FieldElement> coeffs) {
  MPoly p(static_cast<int>(coeffs.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent e{};
    e[k] = 1;
    p.add_term(e, coeffs[k]);
  }
  return p;
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : hq::total_degree(terms_.begin()->first); }

int MPoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  for (const auto& [e, c] : terms_) {
    if (hq::total_degree(e) != d) return false;
  }
  return true;
}

FieldElement MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement(0) : it->second;
}

const Exponent& MPoly::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const FieldElement& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void MPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("mismatched variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("mismatched variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("mismatched variable sets");
  MPoly p(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int k = 0; k < kMaxVars; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(nvars_, FieldElement(1));
  MPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(int var) const {
  MPoly d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    d.add_term(f, c * FieldElement(static_cast<long>(e[var])));
  }
  return d;
}

FieldElement MPoly::evaluate(std::span<const FieldElement> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
  std::vector<std::vector<FieldElement>> powers(nvars_);
  for (int k = 0; k < nvars_; ++k) {
    const int deg = degree_in(k);
    powers[k].push_back(FieldElement(1));
    for (int j = 1; j <= deg; ++j) powers[k].push_back(powers[k].back() * point[k]);
  }
  FieldElement sum(0);
  for (const auto& [e, c] : terms_) {
    FieldElement term = c;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] > 0) term *= powers[k][e[k]];
    }
    sum += term;
  }
  return sum;
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
  const int target = images.empty() ? 1 : images[0].nvars();
  for (const auto& im : images) {
    if (im.nvars() != target) throw std::invalid_argument("mismatched variable sets");
  }
  std::vector<std::vector<MPoly>> powers(nvars_);
  for (int k = 0; k < nvars_; ++k) {
    const int deg = degree_in(k);
    powers[k].push_back(constant(target, FieldElement(1)));
    for (int j = 1; j <= deg; ++j) powers[k].push_back(powers[k].back() * images[k]);
  }
  MPoly result(target);
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(target, c);
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] > 0) term = term * powers[k][e[k]];
    }
    result += term;
  }
  return result;
}

MPoly MPoly::normalized() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

TowerPtr MPoly::coefficient_tower() const {
  TowerPtr t = Tower::rationals();
  for (const auto& [e, c] : terms_) t = common_tower(t, c.tower());
  return t;
}

std::vector<std::string> default_variable_names(int nvars) {
  switch (nvars) {
    case 1: return {"t"};
    case 3: return {"s", "t", "u"};
    case 4: return {"x", "y", "z", "w"};
    default: {
      std::vector<std::string> names;
      for (int k = 0; k < nvars; ++k) names.push_back("x" + std::to_string(k));
      return names;
    }
  }
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(nvars_);
    names = fallback;
  }
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.to_rational();
      negative = sgn(q) < 0;
      Rational mag = abs(q);
      if (!(mag == 1) || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    os << coeff;
    if (!coeff.empty() && !mono.empty()) os << "*";
    os << mono;
    first = false;
  }
  return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw std::invalid_argument("mismatched variable sets");
  const Exponent& lg = g.leading_exponent();
  const FieldElement lc_inv = g.leading_coefficient().inverse();
  MPoly q(f.nvars());
  MPoly r = f;
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    Exponent e;
    for (int k = 0; k < kMaxVars; ++k) {
      if (lr[k] < lg[k]) return std::nullopt;
      e[k] = static_cast<std::uint8_t>(lr[k] - lg[k]);
    }
    MPoly t = MPoly::monomial(f.nvars(), e, r.leading_coefficient() * lc_inv);
    q += t;
    r -= t * g;
  }
  return q;
}

std::optional<FieldElement> proportionality_factor(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero() || f.term_count() != g.term_count()) return std::nullopt;
  if (f.leading_exponent() != g.leading_exponent()) return std::nullopt;
  FieldElement c = f.leading_coefficient() / g.leading_coefficient();
  if (!(f - g * c).is_zero()) return std::nullopt;
  return c;
}

namespace {

void check_same_nvars(const PolyMatrix4& m) {
  const int n = m[0][0].nvars();
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.nvars() != n) throw std::invalid_argument("mismatched variable sets");
}

MPoly det3_entries(const PolyMatrix4& m, const std::array<int, 3>& rows, const std::array<int, 3>& cols) {
  auto at = [&](int r, int c) -> const MPoly& { return m[rows[r]][cols[c]]; };
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

std::array<int, 3> others(int skip) {
  std::array<int, 3> out{};
  int k = 0;
  for (int j = 0; j < 4; ++j)
    if (j != skip) out[k++] = j;
  return out;
}

}  // namespace

MPoly poly_det4(const PolyMatrix4& m) {
  check_same_nvars(m);
  MPoly det(m[0][0].nvars());
  for (int c = 0; c < 4; ++c) {
    if (m[0][c].is_zero()) continue;
    MPoly term = m[0][c] * det3_entries(m, others(0), others(c));
    if (c % 2 == 0) det += term; else det -= term;
  }
  return det;
}

MPoly poly_det4_by_column(const PolyMatrix4& m, int col) {
  check_same_nvars(m);
  MPoly det(m[0][0].nvars());
  for (int r = 0; r < 4; ++r) {
    if (m[r][col].is_zero()) continue;
    MPoly term = m[r][col] * det3_entries(m, others(r), others(col));
    if ((r + col) % 2 == 0) det += term; else det -= term;
  }
  return det;
}

MPoly restrict_to_plane(const MPoly& f, std::span<const FieldElement> plane) {
  if (f.nvars() != 4 || plane.size() != 4) throw std::invalid_argument("plane restriction needs 4 variables");
  int pivot = -1;
  for (int k = 0; k < 4; ++k) {
    if (!plane[k].is_zero()) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) throw std::invalid_argument("zero plane");
  std::vector<MPoly> images(4, MPoly(3));
  std::vector<FieldElement> pivot_form(3, FieldElement(0));
  const FieldElement inv = plane[pivot].inverse();
  int slot = 0;
  for (int k = 0; k < 4; ++k) {
    if (k == pivot) continue;
    images[k] = MPoly::variable(3, slot);
    pivot_form[slot] = -(plane[k] * inv);
    ++slot;
  }
  images[pivot] = MPoly::linear_form(pivot_form);
  return f.substitute(images);
}

std::optional<SquareRoot> perfect_square_root(const MPoly& f) {
  if (f.is_zero()) return SquareRoot{FieldElement(1), f};
  const Exponent& lead = f.leading_exponent();
  Exponent root_lead{};
  for (int k = 0; k < kMaxVars; ++k) {
    if (lead[k] % 2 != 0) return std::nullopt;
    root_lead[k] = static_cast<std::uint8_t>(lead[k] / 2);
  }
  const FieldElement c = f.leading_coefficient();
  const MPoly target = f * c.inverse();
  MPoly root = MPoly::monomial(f.nvars(), root_lead, FieldElement(1));
  const FieldElement half = FieldElement(Rational(1, 2));
  Exponent last = root_lead;
  GrlexGreater greater;
  MPoly rest = target - root * root;
  while (!rest.is_zero()) {
    const Exponent& lr = rest.leading_exponent();
    Exponent e;
    for (int k = 0; k < kMaxVars; ++k) {
      if (lr[k] < root_lead[k]) return std::nullopt;
      e[k] = static_cast<std::uint8_t>(lr[k] - root_lead[k]);
    }
    // New root terms must strictly decrease, otherwise no square root exists.
    if (!greater(last, e)) return std::nullopt;
    root.add_term(e, rest.leading_coefficient() * half);
    last = e;
    rest = target - root * root;
  }
  return SquareRoot{c, root};
}

std::vector<FieldElement> dense_coefficients(const MPoly& f) {
  if (f.nvars() != 1) throw std::invalid_argument("univariate polynomial expected");
  std::vector<FieldElement> c(f.is_zero() ? 0 : f.total_degree() + 1, FieldElement(0));
  for (const auto& [e, coeff] : f.terms()) c[e[0]] = coeff;
  return c;
}

MPoly from_dense(const std::vector<FieldElement>& coeffs) {
  MPoly p(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent e{};
    e[0] = static_cast<std::uint8_t>(k);
    p.add_term(e, coeffs[k]);
  }
  return p;
}

UnivariateDivision univ_divide(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto r = dense_coefficients(f);
  const auto d = dense_coefficients(g);
  const FieldElement lead_inv = d.back().inverse();
  const std::size_t dg = d.size() - 1;
  std::vector<FieldElement> q(r.size() >= d.size() ? r.size() - dg : 0, FieldElement(0));
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k].is_zero()) continue;
    FieldElement t = r[k] * lead_inv;
    q[k - dg] = t;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= t * d[j];
  }
  return {from_dense(q), from_dense(r)};
}

MPoly univ_gcd(const MPoly& f, const MPoly& g) {
  MPoly a = f, b = g;
  while (!b.is_zero()) {
    MPoly r = univ_divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.normalized();
}

MPoly univ_squarefree_part(const MPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (f.total_degree() == 0) return MPoly::constant(1, FieldElement(1));
  MPoly g = univ_gcd(f, f.derivative(0));
  return univ_divide(f, g).quotient.normalized();
}

Matrix<FieldElement> quadratic_form_matrix(const MPoly& q) {
  const int n = q.nvars();
  Matrix<FieldElement> m(n, n);
  const FieldElement half = FieldElement(Rational(1, 2));
  for (const auto& [e, c] : q.terms()) {
    if (total_degree(e) != 2) throw std::invalid_argument("quadratic form expected");
    std::vector<int> idx;
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < e[k]; ++j) idx.push_back(k);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = c;
    } else {
      m(idx[0], idx[1]) = c * half;
      m(idx[1], idx[0]) = c * half;
    }
  }
  return m;
}

FieldElement det3(const Matrix<FieldElement>& m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("3x3 matrix expected");
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace hq
