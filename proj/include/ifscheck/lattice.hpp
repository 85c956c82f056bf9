#pragma once

/**
 * @file lattice.hpp
 * @brief Exact integer coordinates for the cells of one level.
 *
 * Every corner of a level-k cell (k <= depth) is an integer multiple of
 * 1/D with D = lcm(translation denominators) · lcm(square denominators) ·
 * lcm(ratio denominators)^depth. Storing corners as int64 multiples of 1/D
 * keeps the arithmetic exact while avoiding bignum allocation per cell, which
 * matters at 24^5 ≈ 8·10^6 cells.
 */

#include "ifscheck/ifs.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace ifscheck {

struct LatticeRect {
  std::int64_t x0, y0, x1, y1;

  friend bool operator==(const LatticeRect&, const LatticeRect&) = default;
};

/// Closed rectangles share a point.
inline bool lattice_touch(const LatticeRect& a, const LatticeRect& b) {
  return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

struct LatticeCell {
  std::uint64_t code;  ///< lexicographic rank of the word among words of its length
  LatticeRect rect;
};

/// Closed interval in lattice units, inclusive on both ends.
struct LatticeInterval {
  std::int64_t lo, hi;
};

class LatticeFrame {
 public:
  /// Throws InputError when the scale or the word codes would overflow 64 bits.
  LatticeFrame(const Ifs& ifs, int depth);

  int depth() const { return depth_; }
  std::size_t alphabet_size() const { return alphabet_size_; }
  const Rational::Int& scale() const { return scale_; }

  /// r·D, which must be an integer. Throws InputError otherwise.
  std::int64_t exact(const Rational& r) const;
  Rational to_rational(std::int64_t v) const;
  RatRect to_rational(const LatticeRect& r) const;

  /// The window [a, b] (closed) as the integer range of lattice points inside
  /// it, clamped to a safe int64 range.
  LatticeInterval inner(const Rational& a, const Rational& b) const;
  /// Band coordinate x − y/4 is measured in units of 1/(4D); same rounding.
  LatticeInterval inner_band(const Rational& a, const Rational& b) const;

  /// Decodes a word code of length depth().
  Word word(std::uint64_t code) const;

 private:
  int depth_;
  std::size_t alphabet_size_;
  Rational::Int scale_;
};

/// Band interval [min, max] of x − y/4 over a cell, in units of 1/(4D).
inline LatticeInterval band_interval(const LatticeRect& r) {
  return {4 * r.x0 - r.y1, 4 * r.x1 - r.y0};
}

/// Depth-first, lexicographic walk of the level-depth cells. `keep` is
/// consulted at every node; when images are nested a rejected node prunes its
/// subtree, otherwise `keep` only filters leaves. `visit` returns false to stop.
void for_each_lattice_cell(const Ifs& ifs, const LatticeFrame& frame,
                           const std::function<bool(const LatticeRect&)>& keep,
                           const std::function<bool(const LatticeCell&)>& visit);

/// All level-depth cells, lexicographic. Throws CapExceeded above cap.
std::vector<LatticeCell> lattice_cells(const Ifs& ifs, const LatticeFrame& frame,
                                       std::uint64_t cap = kDefaultCellCap);

/// Level-depth cells whose closed rectangle meets the closed window.
std::vector<LatticeCell> lattice_cells_in(const Ifs& ifs, const LatticeFrame& frame, const RatRect& window);

}  // namespace ifscheck
