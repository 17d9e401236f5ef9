#pragma once

// Combinatorial model of the two 16-line orbits on a Nieto quartic: the
// incidence set S, the 160 reducible conics L_a + M_b, their complements
// h - L_a - M_b, intersection matrices and orbit statistics.
//
// Intersection dictionary: h^2 = 4, h.L = h.M = 1, L_a.L_b = M_a.M_b = -2 if
// a = b and 0 otherwise, L_a.M_b = 1 if a + b lies in S and 0 otherwise.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hq/heisgroup.hpp"
#include "hq/lattice.hpp"

namespace hq {

struct IncidenceSet {
  std::vector<GroupLabel> members;  // binary order
  bool contains(GroupLabel g) const;
};

/// Labels k with sum_i t_i eps_i(k) = 0, t = (-1,1,1,1,1,1) the signs of the
/// involution. Throws std::logic_error unless exactly 10 labels qualify.
IncidenceSet incidence_set();
/// Sign sum sum_i t_i eps_i(k).
int incidence_sign_sum(GroupLabel k);
/// L_a meets M_b.
bool incident(GroupLabel a, GroupLabel b);

enum class ConicOrdering { a_major, b_major };

struct ReducibleConic {
  GroupLabel a;  // line L_a of the first orbit
  GroupLabel b;  // line M_b of the second orbit
  int ordinal;   // 1-based position in the listing
};

/// The 160 pairs (a, b) with a + b in S, lexicographic with a outer
/// (a_major) or b outer (b_major).
std::vector<ReducibleConic> reducible_conics(ConicOrdering ordering = ConicOrdering::a_major);
std::string conic_label(const ReducibleConic& c, char prefix = 'C');

/// N[(a,b),(a',b')] = -2[a=a'] - 2[b=b'] + inc(a,b') + inc(a',b).
IntegerMatrix gram_reducible(ConicOrdering ordering = ConicOrdering::a_major);

/// Basis h, L_0..L_15, M_0..M_15 and the dictionary Gram matrix on it.
constexpr std::size_t kClassRank = 33;
IntegerMatrix dictionary_gram();
IntegerVector conic_class(GroupLabel a, GroupLabel b);       // L_a + M_b
IntegerVector complement_class(GroupLabel a, GroupLabel b);  // h - L_a - M_b

struct ConfigGram {
  std::vector<std::string> labels;
  IntegerMatrix gram;
};
/// The 160 conics followed by their 160 complements, preceded by h when
/// include_h is set.
ConfigGram gram_full320(bool include_h);

/// An H-orbit of conics: reducible (kind 'C') or complements (kind 'D'),
/// represented by the pair (0, s).
struct ConicOrbit {
  char kind;
  GroupLabel s;
  std::string name() const;
  IntegerVector representative() const;
  IntegerVector translate(GroupLabel g) const;  // class of g applied to the representative
};
std::vector<ConicOrbit> conic_orbits();  // 10 of kind C then 10 of kind D

struct OrbitPairStatistics {
  std::size_t first, second;       // indices into conic_orbits()
  std::map<long, int> distribution;  // C.gD over g (g != 1 when first == second)
};
struct ConicStatistics {
  std::vector<ConicOrbit> orbits;
  std::vector<OrbitPairStatistics> self;   // one per orbit
  std::vector<OrbitPairStatistics> cross;  // every unordered pair of distinct orbits
};
ConicStatistics conic_statistics();

/// Indexing conventions for the listed ordinals: base 1 or 0, and which
/// orbit plays the outer role.
struct ConventionVariant {
  int base;
  ConicOrdering ordering;
  std::string name() const;
  friend bool operator==(const ConventionVariant& x, const ConventionVariant& y) {
    return x.base == y.base && x.ordering == y.ordering;
  }
};
/// Search order: 1-based a-major, 1-based b-major, 0-based a-major, 0-based b-major.
std::array<ConventionVariant, 4> convention_variants();
/// The variant frozen after the search, 1-based a-major.
ConventionVariant frozen_variant();

/// The 16 ordinals selecting the reference submatrix.
const std::array<int, 16>& reference_ordinals();
/// The reference 16x16 intersection matrix of those conics.
IntegerMatrix reference_matrix();

IntegerMatrix conic_submatrix(const ConventionVariant& variant, const std::array<int, 16>& ordinals);

struct SubmatrixResult {
  ConventionVariant variant;              // the frozen variant
  std::vector<ConventionVariant> matching;  // every variant reproducing the reference
  std::vector<ReducibleConic> conics;     // the selected conics under the frozen variant
  IntegerMatrix matrix;
  Integer det;
};
/// Runs the convention search and extracts the submatrix under the frozen
/// variant. Throws std::logic_error if the frozen variant does not reproduce
/// the reference matrix.
SubmatrixResult submatrix_M();

}  // namespace hq
