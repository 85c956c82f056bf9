#pragma once

/**
 * @file segments.hpp
 * @brief The slope-4 segment families of the counterexample carpet.
 *
 * ℓ_x runs from (x, 0) to (x + 1/4, 1). For z in C2 with x = x(z):
 *   E_z    = φ_3(ℓ_x) ∪ φ_4(ℓ_x) ∪ φ_5(ℓ_x) ∪ φ_6(ℓ_x)
 *   L_0(z) = φ_2(ℓ_{x(σz)/6 + 1/6}) ∪ φ_1(E_{σz})
 *   L_1(z) = φ_2(E_{σz})
 * E and L are built twice, once as unions of mapped pieces and once from the
 * closed-form endpoints, and the two must agree exactly.
 *
 * The line through (0, z) with slope 4, clipped to the unit square, is
 * covered by {(0, z)} ∪ E_z ∪ ⋃_n φ_{z_1⋯z_{n-1}}(L_{z_n}(σ^{n-1} z)), where a
 * C2 digit 0 selects φ_1 and 1 selects φ_2.
 */

#include "ifscheck/digits.hpp"
#include "ifscheck/report.hpp"

#include <vector>

namespace ifscheck {

/// Closed segment of slope exactly 4, stored bottom to top.
class SlopeFourSegment {
 public:
  /// Throws InputError unless top.y > base.y and 4·(top.x − base.x) = top.y − base.y.
  SlopeFourSegment(RatPoint base, RatPoint top);

  const RatPoint& base() const { return base_; }
  const RatPoint& top() const { return top_; }
  RatSegment segment() const { return RatSegment(base_, top_); }
  /// x − y/4, constant along the segment.
  Rational band_coordinate() const { return base_.x - base_.y / 4; }

  friend bool operator==(const SlopeFourSegment&, const SlopeFourSegment&) = default;

 private:
  RatPoint base_;
  RatPoint top_;
};

/// Image under a similitude; positive homogeneous ratios preserve the slope.
SlopeFourSegment apply(const Similitude& f, const SlopeFourSegment& s);

/// ℓ_x, 0 <= x <= 3/4. Throws InputError otherwise.
SlopeFourSegment ell_x(const Rational& x);

/// Line through (0, z) of slope 4, clipped to [0,1]²; 0 <= z <= 1/5.
SlopeFourSegment ell_z_clipped(const Rational& z);

/// x(z) as a rational.
Rational x_value(const DigitStream& z);

/// Pieces φ_3..φ_6(ℓ_{x(z)}), bottom to top.
std::vector<SlopeFourSegment> e_pieces(const DigitStream& z);
/// Pieces of L_i(z), bottom to top.
std::vector<SlopeFourSegment> l_pieces(int i, const DigitStream& z);

/// Union of bottom-to-top pieces that chain end to end. Throws ConsistencyError otherwise.
SlopeFourSegment chain_union(const std::vector<SlopeFourSegment>& pieces);

/// (x(z)/6, 1/3) to (x(z)/6 + 1/6, 1).
SlopeFourSegment e_closed_form(const DigitStream& z);
/// (x(σz)/36, i/6 + 1/18) to (x(σz)/36 − i/24 + 5/72, 1/3).
SlopeFourSegment l_closed_form(int i, const DigitStream& z);

/// E_z from the union route, asserted equal to the closed form.
/// Throws ConsistencyError on disagreement.
SlopeFourSegment E(const DigitStream& z);
/// L_i(z), i in {0, 1}, same dual construction as E.
SlopeFourSegment L(int i, const DigitStream& z);

/// Shared-endpoint identities behind E_z and L_0(z) being segments, plus the
/// union-vs-closed-form endpoint agreement for E_z, L_0(z), L_1(z).
Report verify_lemma2(const DigitStream& z);

struct Decomposition {
  RatPoint anchor;                      ///< (0, z)
  SlopeFourSegment head;                ///< E_z
  std::vector<SlopeFourSegment> chain;  ///< chain[k] is the piece for n = k + 1
  Rational z;

  /// Lowest height reached: chain.back().base().y.
  const Rational& coverage_low() const { return chain.back().base().y; }
};

/// Head plus N chain pieces. Endpoint chaining and line membership are checked while
/// building; a violation throws ConsistencyError.
Decomposition decompose_ell_z(const DigitStream& z, int N);

/// x(z)/6 − (x(σz)/36 − z_1/24 + 5/72) = 0, and both heights are 1/3.
Report verify_fact1(const DigitStream& z);

/// Pieces n and n+1 of the decomposition share an endpoint; both the direct
/// word-map route and the closed forms are checked.
Report verify_fact2(const DigitStream& z, int n);

/// The dangling endpoint of piece N is within 6^{-N} of (0, z) per coordinate.
Report verify_fact3(const DigitStream& z, int N);

/// Every endpoint of every piece satisfies y = 4x + z.
Report verify_line_membership(const Decomposition& d);

}  // namespace ifscheck
