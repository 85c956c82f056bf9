#pragma once

// Deterministic SVG 1.1 rendering of level-n cells with optional overlays.
// Pictures carry 15 significant digits; exact values live in the reports.

#include "ifscheck/ifs.hpp"
#include "ifscheck/topology.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ifscheck {

struct SegmentOverlay {
  RatSegment segment;
  std::string style = "segment";
};

struct StripOverlay {
  Strip strip;
  std::string style = "strip";
};

struct WindowOverlay {
  RatRect window;
  std::string style = "window";
};

struct PointsOverlay {
  std::vector<RatPoint> points;
  std::string style = "point";
};

using Overlay = std::variant<SegmentOverlay, StripOverlay, WindowOverlay, PointsOverlay>;

struct RenderSpec {
  int depth = 1;
  int canvas_size = 600;
  std::vector<Overlay> overlays;
  bool flip_y = true;
  std::uint64_t cap = kDefaultCellCap;
};

/// Throws InputError on a non-positive canvas or negative depth, CapExceeded
/// above the cell cap. Identical inputs give byte-identical output.
std::string render_svg(const Ifs& ifs, const RenderSpec& spec);

/// Decimal with 15 significant digits, "-0" normalized to "0".
std::string format_decimal(double v);

}  // namespace ifscheck
