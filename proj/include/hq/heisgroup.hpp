#pragma once

// The Heisenberg group H22 in SL4, its quotient H = F2^4 with the commutator
// pairing, the 30 fix lines, and the planes of F2^4 with their invariant
// tetrahedra and fundamental quadrics.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hq/mpoly.hpp"
#include "hq/projective.hpp"

namespace hq {

/// Element (i,j,k,l) of H = F2^4 standing for sigma1^i sigma2^j tau1^k tau2^l.
/// The index i*8 + j*4 + k*2 + l is the binary order used everywhere.
class GroupLabel {
 public:
  constexpr GroupLabel() = default;
  constexpr explicit GroupLabel(unsigned index) : bits_(static_cast<std::uint8_t>(index & 15U)) {}
  static constexpr GroupLabel from_exponents(int i, int j, int k, int l) {
    return GroupLabel(static_cast<unsigned>((i << 3) | (j << 2) | (k << 1) | l));
  }

  constexpr unsigned index() const { return bits_; }
  /// Exponent of generator g in {0: sigma1, 1: sigma2, 2: tau1, 3: tau2}.
  constexpr int exponent(int g) const { return (bits_ >> (3 - g)) & 1; }
  constexpr bool is_identity() const { return bits_ == 0; }

  friend constexpr GroupLabel operator+(GroupLabel a, GroupLabel b) { return GroupLabel(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(GroupLabel a, GroupLabel b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator<(GroupLabel a, GroupLabel b) { return a.bits_ < b.bits_; }

  std::string name() const;  // e.g. "s1*t2", "1"

 private:
  std::uint8_t bits_ = 0;
};

std::vector<GroupLabel> all_labels();  // 16 labels in binary order

enum class Generator { sigma1, sigma2, tau1, tau2 };
IntMatrix4 generator_matrix(Generator g);
/// sigma1^i sigma2^j tau1^k tau2^l as a signed permutation matrix.
IntMatrix4 lift(GroupLabel g);
/// s in {+1,-1} with lift(g) lift(h) = s lift(g+h). Equals (-1)^(k*i' + l*j')
/// for g = (i,j,k,l), h = (i',j',k',l').
int lift_product_sign(GroupLabel g, GroupLabel h);
/// Label of a group element given up to sign, if any.
std::optional<GroupLabel> label_of(const IntMatrix4& m);

struct GroupTable {
  std::vector<IntMatrix4> elements;     // all of H22, sorted
  std::vector<IntMatrix4> center;
  std::vector<IntMatrix4> commutators;  // the commutator subgroup
  std::vector<GroupLabel> labels;       // H
};

/// Closure of the four generators.
GroupTable enumerate_group();

/// 0 if the lifts commute, 1 if they anticommute.
int symplectic_form(GroupLabel g, GroupLabel h);
/// Rank over F2 of a square 0/1 matrix.
int f2_rank(std::vector<std::vector<int>> rows);

struct FixLine {
  GroupLabel owner;
  FieldElement eigenvalue;  // +-1 or +-i
  Line line;
};

/// The two eigenspace lines of a nonidentity element, ordered by their
/// echelon forms. Throws std::invalid_argument for the identity.
std::array<FixLine, 2> fix_lines(GroupLabel g);
/// All 30 fix lines, grouped by owner in binary order.
std::vector<FixLine> all_fix_lines();

struct FixLineIncidence {
  GroupLabel g, h;
  std::array<std::array<bool, 2>, 2> meets{};  // meets[a][b]: line a of g vs line b of h
};
FixLineIncidence fixline_incidence(GroupLabel g, GroupLabel h);

class F2Plane {
 public:
  /// Canonical basis: the two smallest nonzero members.
  F2Plane(GroupLabel g, GroupLabel h);
  GroupLabel first() const { return a_; }
  GroupLabel second() const { return b_; }
  std::array<GroupLabel, 3> nonzero_members() const { return {a_, b_, a_ + b_}; }
  bool contains(GroupLabel g) const;
  bool is_isotropic() const { return symplectic_form(a_, b_) == 0; }
  /// The orthogonal plane under the symplectic form.
  F2Plane orthogonal() const;
  friend bool operator==(const F2Plane& x, const F2Plane& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  std::string name() const;

 private:
  GroupLabel a_, b_;
};

struct PlaneClassification {
  std::vector<F2Plane> isotropic;
  std::vector<F2Plane> anisotropic;
  std::vector<std::pair<F2Plane, F2Plane>> orthogonal_pairs;  // anisotropic P, P-perp
};
PlaneClassification classify_planes();

struct Tetrahedron {
  F2Plane plane;
  std::vector<FixLine> edges;    // 6
  std::vector<Point> vertices;   // 4
  std::vector<PlaneForm> faces;  // 4
  MPoly face_product;            // product of the face forms, normalized
};
/// Throws std::invalid_argument for an anisotropic plane.
Tetrahedron tetrahedron_of(const F2Plane& plane);

struct FundamentalQuadric {
  F2Plane first, second;
  std::vector<FixLine> lines;  // 12: six from each plane
  MPoly form;                  // normalized quadric through all 12 lines
};
/// Throws std::invalid_argument unless the planes are anisotropic and
/// orthogonal; std::logic_error if the quadric is not unique.
FundamentalQuadric quadric_of(const F2Plane& first, const F2Plane& second);

}  // namespace hq
