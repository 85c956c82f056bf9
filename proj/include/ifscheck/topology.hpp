#pragma once

/**
 * @file topology.hpp
 * @brief Cell-contact graphs, vacant slope-4 strips and local connectivity probes.
 *
 * Two level-n cells are adjacent when their closed rectangles meet. This
 * over-approximates intersection of the attractor pieces they contain, so the
 * number of graph components is a lower bound for the number of attractor
 * components, and it never decreases with n. A vacant strip certifies the
 * opposite direction: a slope-4 band that no level-m cell meets misses the
 * attractor entirely.
 */

#include "ifscheck/lattice.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ifscheck {

class CellGraph {
 public:
  /// Builds adjacency and the component partition over the given cells, which
  /// must be sorted by code. Candidate pairs come from a sweep over buckets one
  /// cell wide, so the cost is near linear when cell interiors are disjoint.
  CellGraph(LatticeFrame frame, std::vector<LatticeCell> cells);

  int level() const { return frame_.depth(); }
  std::size_t size() const { return cells_.size(); }
  const LatticeFrame& frame() const { return frame_; }
  const std::vector<LatticeCell>& lattice_cells() const { return cells_; }

  /// Exact word and rectangle of node i.
  Cell cell(std::size_t i) const;

  std::span<const std::uint32_t> neighbors(std::size_t i) const;
  std::size_t edge_count() const { return targets_.size() / 2; }
  /// Each edge once as (u, v) with u < v, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  /// Component labels numbered 0, 1, ... in order of first appearance.
  std::uint32_t label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  std::size_t component_count() const { return components_; }

  /// Node index of a word code, if present.
  std::optional<std::size_t> index_of(std::uint64_t code) const;

  /// Sorted distinct labels of the cells meeting a closed segment.
  std::vector<std::uint32_t> labels_meeting(const RatSegment& s) const;

 private:
  LatticeFrame frame_;
  std::vector<LatticeCell> cells_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint32_t> labels_;
  std::size_t components_ = 0;
};

/// Throws CapExceeded when |maps|^n exceeds cap.
CellGraph build_cell_graph(const Ifs& ifs, int n, std::uint64_t cap = kDefaultCellCap);

std::size_t component_count(const Ifs& ifs, int n, std::uint64_t cap = kDefaultCellCap);

/// Text export, one edge per line: "<word> <word>", words as in Word::to_string.
void write_edge_list(std::ostream& os, const CellGraph& g);

/// The open band {c_low < x − y/4 < c_high}.
class Strip {
 public:
  /// Throws InputError unless c_low < c_high.
  Strip(Rational c_low, Rational c_high);

  const Rational& c_low() const { return low_; }
  const Rational& c_high() const { return high_; }

  friend bool operator==(const Strip&, const Strip&) = default;

 private:
  Rational low_;
  Rational high_;
};

/// Closed band [c_low, c_high] meets the closed rectangle.
bool band_meets_rect(const Strip& s, const RatRect& r);

/// No level-m cell meets the closed band.
bool strip_is_vacant(const Ifs& ifs, const Strip& s, int m);

struct VacantStrip {
  Strip strip;
  int depth;
  Rational gap_low;   ///< the open gap the strip was cut from
  Rational gap_high;
};

/// Searches depths 0..max_depth for the widest gap between band intervals
/// of cells inside the hint range. Throws InputError unless low_hint < high_hint.
std::optional<VacantStrip> find_vacant_strip(const Ifs& ifs, const Rational& low_hint, const Rational& high_hint,
                                             int max_depth);

/// The segment φ_anchor({xmax} × [ymin, ymax]) of the invariant square.
RatSegment right_side(const Ifs& ifs, const Word& anchor = {});

/// Label of the component holding every cell that meets right_side(ifs, anchor).
/// Throws PremiseError when no cell meets it or when it is split.
std::uint32_t component_of_right_side(const CellGraph& g, const Ifs& ifs, const Word& anchor = {});
std::uint32_t component_of_right_side(const Ifs& ifs, int n, const Word& anchor = {});

struct ProbeResult {
  RatPoint center;
  Rational radius;
  int depth = 0;
  Word anchor;
  std::uint32_t global_component_id = 0;
  std::size_t window_cells = 0;     ///< level-depth cells meeting the window
  std::size_t anchored_cells = 0;   ///< of those, cells in the anchor's component
  std::size_t local_component_count = 0;
};

/// Counts the components of the window's share of the anchor component, with
/// adjacency recomputed inside the L∞ window of radius r around p.
ProbeResult local_connectivity_probe(const Ifs& ifs, const RatPoint& p, const Rational& r, int n,
                                     const Word& anchor = {});

}  // namespace ifscheck
