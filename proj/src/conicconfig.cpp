#include "hq/conicconfig.hpp"

#include <algorithm>
#include <stdexcept>

#include "hq/kleinlines.hpp"

namespace hq {

namespace {

constexpr std::array<int, 6> kInvolutionSigns{-1, 1, 1, 1, 1, 1};

std::size_t l_index(GroupLabel a) { return 1 + a.index(); }
std::size_t m_index(GroupLabel b) { return 17 + b.index(); }

const IncidenceSet& cached_incidence() {
  static const IncidenceSet s = incidence_set();
  return s;
}

}  // namespace

bool IncidenceSet::contains(GroupLabel g) const {
  return std::find(members.begin(), members.end(), g) != members.end();
}

int incidence_sign_sum(GroupLabel k) {
  const SignCharacter eps = sign_character(k);
  int s = 0;
  for (int i = 0; i < 6; ++i) s += kInvolutionSigns[i] * eps[i];
  return s;
}

IncidenceSet incidence_set() {
  IncidenceSet out;
  for (const auto k : all_labels())
    if (incidence_sign_sum(k) == 0) out.members.push_back(k);
  if (out.members.size() != 10)
    throw std::logic_error("incidence set has " + std::to_string(out.members.size()) + " elements instead of 10");
  return out;
}

bool incident(GroupLabel a, GroupLabel b) { return cached_incidence().contains(a + b); }

std::vector<ReducibleConic> reducible_conics(ConicOrdering ordering) {
  std::vector<ReducibleConic> out;
  for (const auto outer : all_labels())
    for (const auto inner : all_labels()) {
      const GroupLabel a = ordering == ConicOrdering::a_major ? outer : inner;
      const GroupLabel b = ordering == ConicOrdering::a_major ? inner : outer;
      if (incident(a, b)) out.push_back({a, b, static_cast<int>(out.size()) + 1});
    }
  if (out.size() != 160) throw std::logic_error("expected 160 reducible conics");
  return out;
}

std::string conic_label(const ReducibleConic& c, char prefix) {
  return std::string(1, prefix) + std::to_string(c.ordinal) + "_a" + std::to_string(c.a.index()) + "_b" +
         std::to_string(c.b.index());
}

IntegerMatrix gram_reducible(ConicOrdering ordering) {
  const auto conics = reducible_conics(ordering);
  const std::size_t n = conics.size();
  IntegerMatrix g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = conics[r];
      const auto& y = conics[c];
      long v = 0;
      if (x.a == y.a) v -= 2;
      if (x.b == y.b) v -= 2;
      v += incident(x.a, y.b) + incident(y.a, x.b);
      g(r, c) = v;
    }
  if (!g.is_symmetric()) throw std::logic_error("reducible conic matrix is not symmetric");
  return g;
}

IntegerMatrix dictionary_gram() {
  IntegerMatrix g(kClassRank, kClassRank);
  g(0, 0) = 4;
  for (const auto a : all_labels()) {
    g(0, l_index(a)) = g(l_index(a), 0) = 1;
    g(0, m_index(a)) = g(m_index(a), 0) = 1;
    g(l_index(a), l_index(a)) = -2;
    g(m_index(a), m_index(a)) = -2;
    for (const auto b : all_labels())
      if (incident(a, b)) g(l_index(a), m_index(b)) = g(m_index(b), l_index(a)) = 1;
  }
  return g;
}

IntegerVector conic_class(GroupLabel a, GroupLabel b) {
  IntegerVector v(kClassRank, Integer(0));
  v[l_index(a)] = 1;
  v[m_index(b)] = 1;
  return v;
}

IntegerVector complement_class(GroupLabel a, GroupLabel b) {
  IntegerVector v(kClassRank, Integer(0));
  v[0] = 1;
  v[l_index(a)] = -1;
  v[m_index(b)] = -1;
  return v;
}

ConfigGram gram_full320(bool include_h) {
  const auto conics = reducible_conics();
  ConfigGram out;
  std::vector<IntegerVector> classes;
  if (include_h) {
    IntegerVector h(kClassRank, Integer(0));
    h[0] = 1;
    classes.push_back(h);
    out.labels.push_back("h");
  }
  for (const auto& c : conics) {
    classes.push_back(conic_class(c.a, c.b));
    out.labels.push_back(conic_label(c, 'C'));
  }
  for (const auto& c : conics) {
    classes.push_back(complement_class(c.a, c.b));
    out.labels.push_back(conic_label(c, 'D'));
  }
  const IntegerMatrix dict = dictionary_gram();
  const std::size_t n = classes.size();
  out.gram = IntegerMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) out.gram(r, c) = out.gram(c, r) = inner(dict, classes[r], classes[c]);
  return out;
}

std::string ConicOrbit::name() const { return std::string(1, kind) + "[s=" + s.name() + "]"; }

IntegerVector ConicOrbit::representative() const { return translate(GroupLabel(0)); }

IntegerVector ConicOrbit::translate(GroupLabel g) const {
  return kind == 'C' ? conic_class(g, s + g) : complement_class(g, s + g);
}

std::vector<ConicOrbit> conic_orbits() {
  std::vector<ConicOrbit> out;
  for (const char kind : {'C', 'D'})
    for (const auto s : cached_incidence().members) out.push_back({kind, s});
  return out;
}

ConicStatistics conic_statistics() {
  ConicStatistics out;
  out.orbits = conic_orbits();
  const IntegerMatrix dict = dictionary_gram();
  const std::size_t n = out.orbits.size();
  for (std::size_t i = 0; i < n; ++i) {
    const IntegerVector c = out.orbits[i].representative();
    for (std::size_t j = i; j < n; ++j) {
      OrbitPairStatistics st{i, j, {}};
      for (const auto g : all_labels()) {
        if (i == j && g.is_identity()) continue;
        st.distribution[inner(dict, c, out.orbits[j].translate(g)).get_si()] += 1;
      }
      (i == j ? out.self : out.cross).push_back(std::move(st));
    }
  }
  return out;
}

std::string ConventionVariant::name() const {
  return std::to_string(base) + "-based " + (ordering == ConicOrdering::a_major ? "a-major" : "b-major");
}

std::array<ConventionVariant, 4> convention_variants() {
  return {ConventionVariant{1, ConicOrdering::a_major}, ConventionVariant{1, ConicOrdering::b_major},
          ConventionVariant{0, ConicOrdering::a_major}, ConventionVariant{0, ConicOrdering::b_major}};
}

ConventionVariant frozen_variant() { return {1, ConicOrdering::a_major}; }

const std::array<int, 16>& reference_ordinals() {
  static const std::array<int, 16> ordinals{4, 7, 21, 27, 36, 50, 75, 81, 88, 110, 114, 128, 131, 138, 141, 154};
  return ordinals;
}

IntegerMatrix reference_matrix() {
  static const std::vector<std::vector<long>> rows{
      {-2, 0, 2, 1, 2, 2, 1, 0, 0, 2, 0, 1, 1, 2, 1, 1},  {0, -2, 1, 0, 2, 1, 2, 0, 0, 1, 2, 2, 1, 2, 1, 2},
      {2, 1, -2, 0, 1, 1, 2, 0, 1, 1, 1, 0, 0, 0, 1, 2},  {1, 0, 0, -2, 1, 0, 2, 1, 2, 1, 1, 1, 1, 1, 1, 2},
      {2, 2, 1, 1, -2, 1, 1, 2, 2, 0, 1, 2, 1, 1, 1, 0},  {2, 1, 1, 0, 1, -2, 1, 2, 1, 0, 2, 2, 1, 1, 2, 1},
      {1, 2, 2, 2, 1, 1, -2, 1, 0, 2, 1, 1, 1, 0, 1, 1},  {0, 0, 0, 1, 2, 2, 1, -2, 0, 1, 1, 1, 0, 1, 0, 2},
      {0, 0, 1, 2, 2, 1, 0, 0, -2, 2, 1, 2, 0, 1, 2, 1},  {2, 1, 1, 1, 0, 0, 2, 1, 2, -2, 2, 2, 1, 1, 1, 0},
      {0, 2, 1, 1, 1, 2, 1, 1, 1, 2, -2, 0, 1, 1, 2, 0},  {1, 2, 0, 1, 2, 2, 1, 1, 2, 2, 0, -2, 2, 0, 1, 2},
      {1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 2, -2, 0, 0, 0},  {2, 2, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, -2, 1, 1},
      {1, 1, 1, 1, 1, 2, 1, 0, 2, 1, 2, 1, 0, 1, -2, 1},  {1, 2, 2, 2, 0, 1, 1, 2, 1, 0, 0, 2, 0, 1, 1, -2}};
  return integer_matrix(rows);
}

IntegerMatrix conic_submatrix(const ConventionVariant& variant, const std::array<int, 16>& ordinals) {
  const IntegerMatrix n = gram_reducible(variant.ordering);
  std::array<std::size_t, 16> idx;
  for (int k = 0; k < 16; ++k) {
    const int i = ordinals[k] - variant.base;
    if (i < 0 || i >= static_cast<int>(n.rows())) throw std::out_of_range("ordinal outside the conic listing");
    idx[k] = static_cast<std::size_t>(i);
  }
  IntegerMatrix m(16, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) m(r, c) = n(idx[r], idx[c]);
  return m;
}

SubmatrixResult submatrix_M() {
  const IntegerMatrix reference = reference_matrix();
  SubmatrixResult out{frozen_variant(), {}, {}, IntegerMatrix(16, 16), 0};
  for (const auto& v : convention_variants())
    if (conic_submatrix(v, reference_ordinals()) == reference) out.matching.push_back(v);
  if (std::find(out.matching.begin(), out.matching.end(), out.variant) == out.matching.end())
    throw std::logic_error("the frozen convention does not reproduce the reference matrix");
  out.matrix = conic_submatrix(out.variant, reference_ordinals());
  const auto conics = reducible_conics(out.variant.ordering);
  for (const int k : reference_ordinals()) out.conics.push_back(conics[k - out.variant.base]);
  out.det = det_exact(out.matrix);
  return out;
}

}  // namespace hq
