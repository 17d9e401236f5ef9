#pragma once

// Seeded generators shared by the property tests.

#include <random>
#include <vector>

#include "hq/field.hpp"
#include "hq/mpoly.hpp"
#include "hq/projective.hpp"

namespace hqtest {

using hq::FieldElement;
using hq::MPoly;
using hq::Rational;

inline long small_int(std::mt19937_64& rng, long bound = 9) {
  return std::uniform_int_distribution<long>(-bound, bound)(rng);
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  const long den = std::uniform_int_distribution<long>(1, bound)(rng);
  return hq::make_rational(small_int(rng, bound), den);
}

inline FieldElement random_element(std::mt19937_64& rng, const hq::TowerPtr& tower, long bound = 9) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < tower->dimension(); ++k) c.push_back(random_rational(rng, bound));
  return FieldElement(tower, c);
}

inline FieldElement random_nonzero(std::mt19937_64& rng, const hq::TowerPtr& tower) {
  while (true) {
    FieldElement x = random_element(rng, tower);
    if (!x.is_zero()) return x;
  }
}

inline hq::Point random_point(std::mt19937_64& rng, long bound = 9) {
  while (true) {
    hq::Point p = hq::make_point(small_int(rng, bound), small_int(rng, bound), small_int(rng, bound), small_int(rng, bound));
    for (const auto& c : p)
      if (!c.is_zero()) return p;
  }
}

/// Homogeneous polynomial with random integer coefficients (some zero).
inline MPoly random_form(std::mt19937_64& rng, int nvars, int degree, const hq::TowerPtr& tower = hq::Tower::rationals()) {
  MPoly f(nvars);
  for (const auto& e : hq::monomials_of_degree(nvars, degree)) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;
    f += MPoly::monomial(nvars, e, random_element(rng, tower, 5));
  }
  return f;
}

}  // namespace hqtest
