#include "ifscheck/topology.hpp"

#include "ifscheck/errors.hpp"
#include "ifscheck/union_find.hpp"

#include <algorithm>
#include <ostream>

namespace ifscheck {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

struct BucketEntry {
  std::int64_t by;
  std::int64_t bx;
  std::uint32_t node;

  friend bool operator<(const BucketEntry& a, const BucketEntry& b) {
    if (a.by != b.by) return a.by < b.by;
    if (a.bx != b.bx) return a.bx < b.bx;
    return a.node < b.node;
  }
};

// Touching pairs among cells. Buckets are as wide as the widest cell, so a
// touching partner sits at most one bucket away in each direction; each pair
// is tested from the lower row, or from the left within a row.
std::vector<std::pair<std::uint32_t, std::uint32_t>> touching_pairs(const std::vector<LatticeCell>& cells) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (cells.size() < 2) return pairs;
  std::int64_t bw = 1, bh = 1;
  for (const auto& c : cells) {
    bw = std::max(bw, c.rect.x1 - c.rect.x0);
    bh = std::max(bh, c.rect.y1 - c.rect.y0);
  }
  std::vector<BucketEntry> entries;
  entries.reserve(cells.size());
  for (std::uint32_t i = 0; i < cells.size(); ++i) {
    entries.push_back({floor_div(cells[i].rect.y0, bh), floor_div(cells[i].rect.x0, bw), i});
  }
  std::sort(entries.begin(), entries.end());

  const auto test = [&](const BucketEntry& a, const BucketEntry& b) {
    if (lattice_touch(cells[a.node].rect, cells[b.node].rect)) {
      pairs.emplace_back(std::min(a.node, b.node), std::max(a.node, b.node));
    }
  };

  std::size_t row = 0;
  while (row < entries.size()) {
    std::size_t row_end = row;
    while (row_end < entries.size() && entries[row_end].by == entries[row].by) ++row_end;
    for (std::size_t a = row; a < row_end; ++a) {
      for (std::size_t b = a + 1; b < row_end && entries[b].bx <= entries[a].bx + 1; ++b) test(entries[a], entries[b]);
    }
    if (row_end < entries.size() && entries[row_end].by == entries[row].by + 1) {
      std::size_t next_end = row_end;
      while (next_end < entries.size() && entries[next_end].by == entries[row_end].by) ++next_end;
      std::size_t start = row_end;
      for (std::size_t a = row; a < row_end; ++a) {
        while (start < next_end && entries[start].bx < entries[a].bx - 1) ++start;
        for (std::size_t b = start; b < next_end && entries[b].bx <= entries[a].bx + 1; ++b) {
          test(entries[a], entries[b]);
        }
      }
    }
    row = row_end;
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

CellGraph::CellGraph(LatticeFrame frame, std::vector<LatticeCell> cells)
    : frame_(std::move(frame)), cells_(std::move(cells)) {
  if (cells_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw CapExceeded("cell graph: too many nodes for 32-bit indices");
  }
  if (!std::is_sorted(cells_.begin(), cells_.end(),
                      [](const LatticeCell& a, const LatticeCell& b) { return a.code < b.code; })) {
    throw InputError("cell graph: cells must be sorted by word code");
  }
  const auto pairs = touching_pairs(cells_);

  offsets_.assign(cells_.size() + 1, 0);
  for (const auto& [u, v] : pairs) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  targets_.resize(offsets_.back());
  std::vector<std::uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
  DisjointSets sets(cells_.size());
  for (const auto& [u, v] : pairs) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
    sets.unite(u, v);
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> root_label(cells_.size(), kUnset);
  labels_.resize(cells_.size());
  for (std::uint32_t i = 0; i < cells_.size(); ++i) {
    auto& l = root_label[sets.find(i)];
    if (l == kUnset) l = static_cast<std::uint32_t>(components_++);
    labels_[i] = l;
  }
}

Cell CellGraph::cell(std::size_t i) const {
  return Cell{frame_.word(cells_.at(i).code), frame_.to_rational(cells_[i].rect)};
}

std::span<const std::uint32_t> CellGraph::neighbors(std::size_t i) const {
  return {targets_.data() + offsets_.at(i), static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> CellGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < cells_.size(); ++u) {
    for (auto v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::size_t> CellGraph::index_of(std::uint64_t code) const {
  const auto it = std::lower_bound(cells_.begin(), cells_.end(), code,
                                   [](const LatticeCell& c, std::uint64_t k) { return c.code < k; });
  if (it == cells_.end() || it->code != code) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<std::uint32_t> CellGraph::labels_meeting(const RatSegment& s) const {
  const LatticeInterval xs = frame_.inner(min(s.p().x, s.q().x), max(s.p().x, s.q().x));
  const LatticeInterval ys = frame_.inner(min(s.p().y, s.q().y), max(s.p().y, s.q().y));
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& r = cells_[i].rect;
    // Bounding-box prefilter; the closed-window rounding keeps it conservative.
    if (r.x0 > xs.hi + 1 || r.x1 < xs.lo - 1 || r.y0 > ys.hi + 1 || r.y1 < ys.lo - 1) continue;
    if (segment_meets_rect(s, frame_.to_rational(r))) out.push_back(labels_[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CellGraph build_cell_graph(const Ifs& ifs, int n, std::uint64_t cap) {
  if (n < 0) throw InputError("cell graph: depth must be non-negative");
  LatticeFrame frame(ifs, n);
  auto cells = lattice_cells(ifs, frame, cap);
  return CellGraph(std::move(frame), std::move(cells));
}

std::size_t component_count(const Ifs& ifs, int n, std::uint64_t cap) {
  return build_cell_graph(ifs, n, cap).component_count();
}

void write_edge_list(std::ostream& os, const CellGraph& g) {
  for (const auto& [u, v] : g.edges()) {
    os << g.frame().word(g.lattice_cells()[u].code).to_string() << ' '
       << g.frame().word(g.lattice_cells()[v].code).to_string() << '\n';
  }
}

Strip::Strip(Rational c_low, Rational c_high) : low_(std::move(c_low)), high_(std::move(c_high)) {
  if (!(low_ < high_)) throw InputError("strip: c_low must be below c_high");
}

bool band_meets_rect(const Strip& s, const RatRect& r) {
  // x − y/4 ranges over [xmin − ymax/4, xmax − ymin/4] on the rectangle.
  return r.xmin() - r.ymax() / 4 <= s.c_high() && r.xmax() - r.ymin() / 4 >= s.c_low();
}

namespace {

std::function<bool(const LatticeRect&)> meets_band(const LatticeInterval& band) {
  return [band](const LatticeRect& r) {
    const auto b = band_interval(r);
    return b.lo <= band.hi && b.hi >= band.lo;
  };
}

}  // namespace

bool strip_is_vacant(const Ifs& ifs, const Strip& s, int m) {
  if (m < 0) throw InputError("strip: depth must be non-negative");
  const LatticeFrame frame(ifs, m);
  bool hit = false;
  for_each_lattice_cell(ifs, frame, meets_band(frame.inner_band(s.c_low(), s.c_high())), [&](const LatticeCell&) {
    hit = true;
    return false;
  });
  return !hit;
}

namespace {

struct Gap {
  Rational low, high;
  bool low_is_cell, high_is_cell;
};

// Maximal pieces of [lo, hi] outside the union of the closed intervals.
std::vector<Gap> gaps_within(std::vector<std::pair<Rational, Rational>> covered, const Rational& lo,
                             const Rational& hi) {
  std::vector<Gap> gaps;
  Rational cursor = lo;
  bool cursor_is_cell = false;
  for (const auto& [s, e] : covered) {
    if (e < cursor) continue;
    if (s > cursor) {
      if (s > hi) {
        gaps.push_back({cursor, hi, cursor_is_cell, false});
        return gaps;
      }
      gaps.push_back({cursor, s, cursor_is_cell, true});
    }
    cursor = e;
    cursor_is_cell = true;
    if (cursor >= hi) return gaps;
  }
  if (cursor < hi) gaps.push_back({cursor, hi, cursor_is_cell, false});
  return gaps;
}

}  // namespace

std::optional<VacantStrip> find_vacant_strip(const Ifs& ifs, const Rational& low_hint, const Rational& high_hint,
                                             int max_depth) {
  if (!(low_hint < high_hint)) throw InputError("strip: low hint must be below high hint");
  for (int m = 0; m <= max_depth; ++m) {
    const LatticeFrame frame(ifs, m);
    std::vector<LatticeInterval> bands;
    for_each_lattice_cell(ifs, frame, meets_band(frame.inner_band(low_hint, high_hint)),
                          [&](const LatticeCell& c) {
                            bands.push_back(band_interval(c.rect));
                            return true;
                          });
    std::sort(bands.begin(), bands.end(),
              [](const LatticeInterval& a, const LatticeInterval& b) { return a.lo < b.lo; });
    std::vector<std::pair<Rational, Rational>> covered;
    const Rational unit = Rational(frame.scale()) * 4;
    for (std::size_t i = 0; i < bands.size();) {
      LatticeInterval merged = bands[i++];
      while (i < bands.size() && bands[i].lo <= merged.hi) merged.hi = std::max(merged.hi, bands[i++].hi);
      covered.emplace_back(Rational(merged.lo) / unit, Rational(merged.hi) / unit);
    }

    const auto gaps = gaps_within(std::move(covered), low_hint, high_hint);
    const Gap* widest = nullptr;
    for (const auto& g : gaps) {
      if (widest == nullptr || g.high - g.low > widest->high - widest->low) widest = &g;
    }
    if (widest == nullptr) continue;

    const Rational inset = (widest->high - widest->low) / 4;
    Strip strip(widest->low_is_cell ? widest->low + inset : widest->low,
                widest->high_is_cell ? widest->high - inset : widest->high);
    if (!strip_is_vacant(ifs, strip, m)) {
      throw ConsistencyError("strip: gap sweep and vacancy test disagree at depth " + std::to_string(m));
    }
    return VacantStrip{std::move(strip), m, widest->low, widest->high};
  }
  return std::nullopt;
}

RatSegment right_side(const Ifs& ifs, const Word& anchor) {
  const auto& sq = ifs.invariant_square();
  const auto f = word_map(ifs, anchor);
  return RatSegment(apply(f, RatPoint{sq.xmax(), sq.ymin()}), apply(f, RatPoint{sq.xmax(), sq.ymax()}));
}

std::uint32_t component_of_right_side(const CellGraph& g, const Ifs& ifs, const Word& anchor) {
  const auto labels = g.labels_meeting(right_side(ifs, anchor));
  if (labels.empty()) {
    throw PremiseError("right side of " + anchor.to_string() + " meets no level-" + std::to_string(g.level()) +
                       " cell");
  }
  if (labels.size() > 1) {
    throw PremiseError("right side of " + anchor.to_string() + " is split across " + std::to_string(labels.size()) +
                       " components at level " + std::to_string(g.level()));
  }
  return labels.front();
}

std::uint32_t component_of_right_side(const Ifs& ifs, int n, const Word& anchor) {
  return component_of_right_side(build_cell_graph(ifs, n), ifs, anchor);
}

ProbeResult local_connectivity_probe(const Ifs& ifs, const RatPoint& p, const Rational& r, int n,
                                     const Word& anchor) {
  if (r.sign() <= 0) throw InputError("probe: radius must be positive");
  ProbeResult result{p, r, n, anchor, 0, 0, 0, 0};
  const CellGraph global = build_cell_graph(ifs, n);
  result.global_component_id = component_of_right_side(global, ifs, anchor);

  const auto window = lattice_cells_in(ifs, global.frame(), RatRect::around(p, r));
  result.window_cells = window.size();
  std::vector<LatticeCell> anchored;
  for (const auto& c : window) {
    const auto idx = global.index_of(c.code);
    if (!idx) throw ConsistencyError("probe: window cell missing from the global graph");
    if (global.label(*idx) == result.global_component_id) anchored.push_back(c);
  }
  result.anchored_cells = anchored.size();
  result.local_component_count = CellGraph(global.frame(), std::move(anchored)).component_count();
  return result;
}

}  // namespace ifscheck
