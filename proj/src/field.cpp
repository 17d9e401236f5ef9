#include "hq/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hq {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational '" + part + "'");
    for (std::size_t k = start; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9') throw std::invalid_argument("malformed rational '" + part + "'");
    }
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer num = sqrt(q.get_num());
  Integer den = sqrt(q.get_den());
  return Rational(num, den);
}

Integer squarefree_kernel(const Integer& n, unsigned long trial_limit) {
  if (n == 0) return 0;
  Integer m = abs(n);
  Integer kernel = 1;
  for (unsigned long p = 2; p <= trial_limit && Integer(p) * p <= m; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) kernel *= p;
  }
  if (m > 1 && !mpz_perfect_square_p(m.get_mpz_t())) kernel *= m;
  return sgn(n) < 0 ? Integer(-kernel) : kernel;
}

// ---------------------------------------------------------------------------
// Coordinate-level recursion. A level-h vector a splits as a0 + a1*g_h with
// a0, a1 of level h-1 (low half, high half).

namespace {

using Coords = std::vector<Rational>;

bool all_zero(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Coords add(std::span<const Rational> a, std::span<const Rational> b) {
  Coords c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

Coords sub(std::span<const Rational> a, std::span<const Rational> b) {
  Coords c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
  return c;
}

Coords scale(std::span<const Rational> a, const Rational& s) {
  Coords c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] * s;
  return c;
}

Coords concat(Coords lo, const Coords& hi) {
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

Coords mul(const Tower& t, std::span<const Rational> a, std::span<const Rational> b) {
  if (t.height() == 0) return {a[0] * b[0]};
  const std::size_t h = a.size() / 2;
  const Tower& base = *t.parent();
  auto a0 = a.first(h), a1 = a.subspan(h);
  auto b0 = b.first(h), b1 = b.subspan(h);
  const bool a1z = all_zero(a1), b1z = all_zero(b1);
  if (a1z && b1z) return concat(mul(base, a0, b0), Coords(h));
  if (a1z) return concat(mul(base, a0, b0), mul(base, a0, b1));
  if (b1z) return concat(mul(base, a0, b0), mul(base, a1, b0));
  Coords p11 = mul(base, a1, b1);
  Coords c0 = add(mul(base, a0, b0), mul(base, p11, t.radicand_coords()));
  Coords c1 = add(mul(base, a0, b1), mul(base, a1, b0));
  return concat(std::move(c0), c1);
}

Coords inv(const Tower& t, std::span<const Rational> a) {
  if (t.height() == 0) {
    if (sgn(a[0]) == 0) throw std::domain_error("division by zero in field");
    return {1 / a[0]};
  }
  const std::size_t h = a.size() / 2;
  const Tower& base = *t.parent();
  auto a0 = a.first(h), a1 = a.subspan(h);
  // (a0 + a1 g)^{-1} = (a0 - a1 g) / (a0^2 - d a1^2)
  Coords norm = sub(mul(base, a0, a0), mul(base, mul(base, a1, a1), t.radicand_coords()));
  Coords ninv = inv(base, norm);
  Coords c0 = mul(base, a0, ninv);
  Coords c1 = mul(base, a1, ninv);
  for (auto& q : c1) q = -q;
  return concat(std::move(c0), c1);
}

std::optional<Coords> sqrt_coords(const Tower& t, std::span<const Rational> a) {
  if (t.height() == 0) {
    auto r = rational_sqrt(a[0]);
    if (!r) return std::nullopt;
    return Coords{*r};
  }
  const std::size_t h = a.size() / 2;
  const Tower& base = *t.parent();
  auto a0 = a.first(h), a1 = a.subspan(h);
  const auto& d = t.radicand_coords();
  if (all_zero(a1)) {
    if (auto r = sqrt_coords(base, a0)) return concat(std::move(*r), Coords(h));
    // (r g)^2 = r^2 d
    Coords quotient = mul(base, a0, inv(base, d));
    if (auto r = sqrt_coords(base, quotient)) return concat(Coords(h), *r);
    return std::nullopt;
  }
  // (x + y g)^2 = a0 + a1 g  <=>  x^2 = (a0 +- sqrt(a0^2 - d a1^2)) / 2, y = a1 / (2x)
  Coords disc = sub(mul(base, a0, a0), mul(base, mul(base, a1, a1), d));
  auto n = sqrt_coords(base, disc);
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    Coords x2 = scale(sign > 0 ? add(a0, *n) : sub(a0, *n), Rational(1, 2));
    auto x = sqrt_coords(base, x2);
    if (!x || all_zero(*x)) continue;
    Coords y = mul(base, a1, inv(base, scale(*x, Rational(2))));
    Coords candidate = concat(std::move(*x), y);
    Coords square = mul(t, candidate, candidate);
    if (std::equal(square.begin(), square.end(), a.begin())) return candidate;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

Tower::Tower(TowerPtr parent, std::vector<Rational> radicand)
    : parent_(std::move(parent)), radicand_(std::move(radicand)) {
  height_ = parent_ ? parent_->height() + 1 : 0;
}

TowerPtr Tower::rationals() {
  static const TowerPtr q = std::make_shared<const Tower>(nullptr, std::vector<Rational>{});
  return q;
}

TowerPtr Tower::gaussian() {
  static const TowerPtr gi = rationals()->extend(FieldElement(-1));
  return gi;
}

TowerPtr Tower::extend(const FieldElement& radicand) const {
  TowerPtr self = shared_from_this();
  if (!extends(*radicand.tower())) {
    throw std::invalid_argument("radicand does not belong to the tower being extended");
  }
  FieldElement d = radicand.lifted(self);
  if (d.is_zero()) throw std::domain_error("cannot adjoin the square root of zero");
  if (sqrt_in_field(d)) {
    throw std::domain_error("radicand " + d.to_string() + " is already a square in " + describe());
  }
  return std::make_shared<const Tower>(self, d.coords());
}

FieldElement Tower::radicand() const {
  if (height_ == 0) throw std::logic_error("Q has no radicand");
  return FieldElement(parent_, radicand_);
}

TowerPtr Tower::truncated(std::size_t height) const {
  if (height > height_) throw std::invalid_argument("truncation above tower height");
  TowerPtr t = shared_from_this();
  while (t->height() > height) t = t->parent();
  return t;
}

bool Tower::extends(const Tower& other) const {
  if (other.height() > height_) return false;
  return truncated(other.height())->same_as(other);
}

bool Tower::same_as(const Tower& other) const {
  if (this == &other) return true;
  if (height_ != other.height_) return false;
  if (height_ == 0) return true;
  return radicand_ == other.radicand_ && parent_->same_as(*other.parent_);
}

std::vector<std::vector<Rational>> Tower::radicand_chain() const {
  std::vector<std::vector<Rational>> chain;
  for (const Tower* t = this; t->height() > 0; t = t->parent().get()) chain.push_back(t->radicand_);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::string Tower::describe() const {
  if (height_ == 0) return "Q";
  return parent_->describe() + "(sqrt(" + radicand().to_string() + "))";
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement() : tower_(Tower::rationals()), coords_{Rational(0)} {}
FieldElement::FieldElement(long value) : tower_(Tower::rationals()), coords_{Rational(value)} {}
FieldElement::FieldElement(const Integer& value) : tower_(Tower::rationals()), coords_{Rational(value)} {}
FieldElement::FieldElement(const Rational& value) : tower_(Tower::rationals()), coords_{value} {}

FieldElement::FieldElement(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (!tower_) throw std::invalid_argument("null tower");
  if (coords_.size() != tower_->dimension()) {
    throw std::invalid_argument("coordinate count does not match tower dimension");
  }
}

FieldElement FieldElement::generator(const TowerPtr& tower) {
  if (tower->height() == 0) throw std::invalid_argument("Q has no generator");
  std::vector<Rational> c(tower->dimension());
  c[tower->dimension() / 2] = 1;
  return FieldElement(tower, std::move(c));
}

FieldElement FieldElement::imaginary_unit() { return generator(Tower::gaussian()); }

bool FieldElement::is_zero() const { return all_zero(coords_); }

bool FieldElement::is_one() const {
  return coords_[0] == 1 && all_zero(std::span<const Rational>(coords_).subspan(1));
}

bool FieldElement::is_rational() const { return all_zero(std::span<const Rational>(coords_).subspan(1)); }

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw std::domain_error(to_string() + " is not rational");
  return coords_[0];
}

FieldElement FieldElement::lifted(const TowerPtr& target) const {
  if (target.get() == tower_.get()) return *this;
  if (!target->extends(*tower_)) throw std::invalid_argument("cannot lift into a tower that does not extend");
  std::vector<Rational> c(target->dimension());
  std::copy(coords_.begin(), coords_.end(), c.begin());
  return FieldElement(target, std::move(c));
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a.get() == b.get()) return a;
  if (a->extends(*b)) return a;
  if (b->extends(*a)) return b;
  throw std::invalid_argument("incompatible towers " + a->describe() + " and " + b->describe());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in field");
  return FieldElement(tower_, inv(*tower_, coords_));
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& q : r.coords_) q = -q;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  if (tower_.get() != other.tower_.get() || coords_.size() != other.coords_.size()) {
    TowerPtr t = common_tower(tower_, other.tower_);
    *this = lifted(t);
    const FieldElement o = other.lifted(t);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) { return *this += -other; }

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  if (coords_.size() == 1 && other.coords_.size() == 1) {
    coords_[0] *= other.coords_[0];
    return *this;
  }
  TowerPtr t = common_tower(tower_, other.tower_);
  const FieldElement a = lifted(t);
  const FieldElement b = other.lifted(t);
  if (b.is_rational()) {
    *this = a;
    for (auto& q : coords_) q *= b.coords_[0];
    return *this;
  }
  if (a.is_rational()) {
    *this = b;
    for (auto& q : coords_) q *= a.coords_[0];
    return *this;
  }
  *this = FieldElement(t, mul(*t, a.coords_, b.coords_));
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) { return *this *= other.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.coords_.size() == b.coords_.size() && a.tower_.get() == b.tower_.get()) return a.coords_ == b.coords_;
  TowerPtr t = common_tower(a.tower_, b.tower_);
  return a.lifted(t).coords_ == b.lifted(t).coords_;
}

int FieldElement::compare(const FieldElement& other) const {
  TowerPtr t = common_tower(tower_, other.tower_);
  const FieldElement a = lifted(t), b = other.lifted(t);
  for (std::size_t k = 0; k < a.coords_.size(); ++k) {
    int c = cmp(a.coords_[k], b.coords_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& q = coords_[k];
    if (sgn(q) == 0) continue;
    std::string basis;
    for (std::size_t j = 0; (std::size_t{1} << j) <= k; ++j) {
      if (k & (std::size_t{1} << j)) basis += (basis.empty() ? "" : "*") + std::string("g") + std::to_string(j + 1);
    }
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    if (basis.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << basis;
    } else {
      os << mag.get_str() << "*" << basis;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

std::optional<FieldElement> sqrt_in_field(const FieldElement& a) {
  auto r = sqrt_coords(*a.tower(), a.coords());
  if (!r) return std::nullopt;
  return FieldElement(a.tower(), std::move(*r));
}

}  // namespace hq
