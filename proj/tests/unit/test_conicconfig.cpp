#include <doctest.h>

#include "hq/conicconfig.hpp"

using namespace hq;

namespace {

// Intersection number of L_a + M_b with L_c + M_d straight from the dictionary.
long reducible_product(const ReducibleConic& x, const ReducibleConic& y) {
  long v = 0;
  v += x.a == y.a ? -2 : 0;
  v += x.b == y.b ? -2 : 0;
  v += incident(x.a, y.b) ? 1 : 0;
  v += incident(y.a, x.b) ? 1 : 0;
  return v;
}

}  // namespace

TEST_CASE("incidence set") {
  const IncidenceSet s = incidence_set();
  REQUIRE(s.members.size() == 10);
  CHECK_FALSE(s.contains(GroupLabel(0)));
  for (std::size_t k = 1; k < s.members.size(); ++k) CHECK(s.members[k - 1] < s.members[k]);
  std::vector<unsigned> idx;
  for (const auto g : s.members) idx.push_back(g.index());
  CHECK(idx == std::vector<unsigned>{1, 3, 4, 5, 6, 7, 8, 11, 14, 15});
  for (const auto g : all_labels()) CHECK((incidence_sign_sum(g) == 0) == s.contains(g));
  // Every line of one orbit meets exactly ten lines of the other.
  for (const auto a : all_labels()) {
    int m = 0;
    for (const auto b : all_labels()) m += incident(a, b);
    CHECK(m == 10);
  }
}

TEST_CASE("reducible conic listings") {
  const auto a_major = reducible_conics(ConicOrdering::a_major);
  const auto b_major = reducible_conics(ConicOrdering::b_major);
  REQUIRE(a_major.size() == 160);
  REQUIRE(b_major.size() == 160);
  for (std::size_t k = 0; k < 160; ++k) {
    CHECK(a_major[k].ordinal == static_cast<int>(k) + 1);
    CHECK(incident(a_major[k].a, a_major[k].b));
  }
  for (std::size_t k = 1; k < 160; ++k) {
    CHECK(std::make_pair(a_major[k - 1].a, a_major[k - 1].b) < std::make_pair(a_major[k].a, a_major[k].b));
    CHECK(std::make_pair(b_major[k - 1].b, b_major[k - 1].a) < std::make_pair(b_major[k].b, b_major[k].a));
  }
  CHECK(conic_label(a_major[3]) == "C4_a0_b5");
  CHECK(conic_label(a_major[3], 'D') == "D4_a0_b5");
}

TEST_CASE("intersection matrix of the reducible conics") {
  const auto conics = reducible_conics();
  const IntegerMatrix n = gram_reducible();
  for (std::size_t r = 0; r < 160; ++r) {
    CHECK(n(r, r) == -2);
    int sharing = 0;
    for (std::size_t c = 0; c < 160; ++c) {
      CHECK(n(r, c) == reducible_product(conics[r], conics[c]));
      if (c != r && (conics[r].a == conics[c].a || conics[r].b == conics[c].b)) ++sharing;
    }
    CHECK(sharing == 18);
  }
}

TEST_CASE("dictionary Gram matrix and the 320 conic classes") {
  const IntegerMatrix d = dictionary_gram();
  CHECK(d.rows() == kClassRank);
  CHECK(d.is_symmetric());
  CHECK(d(0, 0) == 4);

  const ConfigGram full = gram_full320(true);
  REQUIRE(full.labels.size() == 321);
  CHECK(full.labels[0] == "h");
  CHECK(full.labels[1] == "C1_a0_b1");
  CHECK(full.labels[161] == "D1_a0_b1");
  const IntegerMatrix n = gram_reducible();
  for (std::size_t r = 0; r < 160; ++r) {
    CHECK(full.gram(0, 1 + r) == 2);        // h.C = 2
    CHECK(full.gram(0, 161 + r) == 2);      // h.D = 4 - 2
    CHECK(full.gram(161 + r, 161 + r) == -2);
    CHECK(full.gram(1 + r, 161 + r) == 4);  // C.(h - C) = 2 + 2
    for (std::size_t c = 0; c < 160; ++c) {
      CHECK(full.gram(1 + r, 1 + c) == n(r, c));
      // (h - C).(h - C') = 4 - 2 - 2 + C.C'
      CHECK(full.gram(161 + r, 161 + c) == n(r, c));
      CHECK(full.gram(1 + r, 161 + c) == 2 - n(r, c));
    }
  }
  const ConfigGram bare = gram_full320(false);
  CHECK(bare.labels.size() == 320);
  CHECK(bare.gram(0, 0) == -2);
}

TEST_CASE("orbit statistics") {
  const ConicStatistics st = conic_statistics();
  REQUIRE(st.orbits.size() == 20);
  CHECK(st.orbits[0].name() == "C[s=t2]");
  CHECK(st.self.size() == 20);
  CHECK(st.cross.size() == 190);
  const std::map<long, int> self{{0, 6}, {2, 9}};
  for (const auto& p : st.self) CHECK(p.distribution == self);
  const std::map<long, int> generic{{0, 4}, {1, 8}, {2, 4}}, paired{{0, 9}, {2, 6}, {4, 1}};
  int generic_count = 0;
  for (const auto& p : st.cross) {
    const auto& x = st.orbits[p.first];
    const auto& y = st.orbits[p.second];
    if (!(x.s == y.s)) {
      CHECK(p.distribution == generic);
      generic_count += 1;
    } else {
      // A conic and its own complement orbit.
      CHECK(p.distribution == paired);
    }
  }
  CHECK(generic_count == 180);
}

TEST_CASE("reference submatrix") {
  const IntegerMatrix m = reference_matrix();
  CHECK(m.is_symmetric());
  for (std::size_t k = 0; k < 16; ++k) CHECK(m(k, k) == -2);
  CHECK(det_exact(m) == -512);
  const SubmatrixResult r = submatrix_M();
  CHECK(r.variant == frozen_variant());
  CHECK(r.variant.name() == "1-based a-major");
  CHECK(r.matrix == m);
  CHECK(r.det == -512);
  REQUIRE(r.conics.size() == 16);
  for (int k = 0; k < 16; ++k) CHECK(r.conics[k].ordinal == reference_ordinals()[k]);
  // The matrix entries are the dictionary products of the selected conics.
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) CHECK(m(a, b) == reducible_product(r.conics[a], r.conics[b]));
  CHECK(std::find(r.matching.begin(), r.matching.end(), frozen_variant()) != r.matching.end());
  std::array<int, 16> bad = reference_ordinals();
  bad[0] = 161;
  CHECK_THROWS_AS(conic_submatrix(frozen_variant(), bad), std::out_of_range);
}
