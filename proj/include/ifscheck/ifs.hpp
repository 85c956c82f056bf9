#pragma once

/**
 * @file ifs.hpp
 * @brief Homogeneous axis-aligned similitude systems and their cylinder cells.
 *
 * Maps are 1-indexed throughout (letter i names maps()[i - 1]), so words
 * read exactly like the subscripts in φ_{w_1 ⋯ w_n}.
 */

#include "ifscheck/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ifscheck {

/// x ↦ ratio·x + translation with 0 < ratio < 1, or the explicit identity.
class Similitude {
 public:
  /// Throws InputError unless 0 < ratio < 1.
  Similitude(Rational ratio, RatPoint translation);

  /// The identity map. The only Similitude allowed ratio 1.
  static Similitude identity();

  const Rational& ratio() const { return ratio_; }
  const RatPoint& translation() const { return translation_; }
  bool is_identity() const { return identity_; }

  friend bool operator==(const Similitude&, const Similitude&) = default;

 private:
  Similitude() = default;
  Rational ratio_{1};
  RatPoint translation_{0, 0};
  bool identity_ = true;
};

RatPoint apply(const Similitude& f, const RatPoint& p);
RatRect apply(const Similitude& f, const RatRect& r);
RatSegment apply(const Similitude& f, const RatSegment& s);

/// f ∘ g: ratio r_f·r_g, translation r_f·a_g + a_f.
Similitude compose(const Similitude& f, const Similitude& g);

/// Sequence of 1-indexed map letters; the empty word is the identity.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  /// The first n letters.
  Word prefix(std::size_t n) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  /// "7.4.12"; the empty word is "-".
  std::string to_string() const;
  /// Inverse of to_string. Throws InputError on malformed text.
  static Word parse(const std::string& text);
};

class Ifs {
 public:
  /// Throws InputError on an empty map list.
  explicit Ifs(std::vector<Similitude> maps, RatRect invariant_square = RatRect::unit_square());

  std::size_t size() const { return maps_.size(); }
  /// 1-indexed. Throws InputError when out of range.
  const Similitude& map(int letter) const;
  const std::vector<Similitude>& maps() const { return maps_; }
  const RatRect& invariant_square() const { return square_; }

  /// Every level-1 image of the invariant square lies inside it, so cells
  /// nest and subtree pruning is sound.
  bool images_nested() const { return nested_; }

 private:
  std::vector<Similitude> maps_;
  RatRect square_;
  bool nested_;
};

/// The 24-map, ratio-1/6 counterexample carpet.
const Ifs& paper_ifs();

/// The full 6×6 grid (36 maps, ratio 1/6); its cells tile the unit square.
Ifs grid_ifs(int k = 6);

/// Homogeneous system with one ratio and a list of translations.
Ifs homogeneous_ifs(const Rational& ratio, const std::vector<RatPoint>& translations,
                    RatRect invariant_square = RatRect::unit_square());

/// φ_{w_1} ∘ ⋯ ∘ φ_{w_n}. Throws InputError on an out-of-range letter.
Similitude word_map(const Ifs& ifs, const Word& w);

/// Level-n cylinder φ_w(invariant square).
struct Cell {
  Word word;
  RatRect rect;

  friend bool operator==(const Cell&, const Cell&) = default;
};

inline constexpr std::uint64_t kDefaultCellCap = 10'000'000;

/// |maps|^n, saturating at UINT64_MAX.
std::uint64_t cell_count(const Ifs& ifs, int n);

/// All level-n cells in lexicographic word order.
/// Throws CapExceeded when |maps|^n > cap, InputError when n < 0.
std::vector<Cell> cells(const Ifs& ifs, int n, std::uint64_t cap = kDefaultCellCap);

/// Level-n cells whose closed rectangle meets the closed window, lexicographic.
/// Descends the word tree and drops subtrees missing the window; falls back
/// to leaf filtering when images are not nested.
std::vector<Cell> cells_pruned(const Ifs& ifs, int n, const RatRect& window);

struct OscReport {
  std::size_t map_count = 0;
  std::vector<int> uncontained;                   // letters whose image leaves the square
  std::size_t pairs_checked = 0;
  std::vector<std::pair<int, int>> overlapping;   // pairs with intersecting interiors

  bool containment() const { return uncontained.empty(); }
  bool disjoint() const { return overlapping.empty(); }
  bool passed() const { return containment() && disjoint(); }
  /// e.g. "24 maps, containment OK, 276 pairs disjoint"
  std::string summary() const;
};

/// Rectangle-image sufficient condition for the (convex) open set condition.
OscReport verify_osc(const Ifs& ifs);

}  // namespace ifscheck
