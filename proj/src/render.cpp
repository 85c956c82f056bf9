#include "ifscheck/render.hpp"

#include "ifscheck/errors.hpp"

#include <cstdio>
#include <sstream>

namespace ifscheck {

std::string format_decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

namespace {

class Canvas {
 public:
  Canvas(const RatRect& square, int size, bool flip) : square_(square), size_(size), flip_(flip) {}

  std::string x(const Rational& v) const { return format_decimal(((v - square_.xmin()) / square_.width() * size_).to_double()); }
  std::string y(const Rational& v) const {
    const Rational t = flip_ ? (square_.ymax() - v) : (v - square_.ymin());
    return format_decimal((t / square_.height() * size_).to_double());
  }
  std::string length(const Rational& v) const { return format_decimal((v / square_.width() * size_).to_double()); }

  std::string rect(const RatRect& r, const std::string& attrs) const {
    return "<rect x=\"" + x(r.xmin()) + "\" y=\"" + y(flip_ ? r.ymax() : r.ymin()) + "\" width=\"" +
           length(r.width()) + "\" height=\"" + length(r.height()) + "\"" + attrs + "/>";
  }

  // Outlines are polygons so that <rect> elements are exactly the cells.
  std::string outline(const RatRect& r, const std::string& attrs) const {
    return "<polygon points=\"" + x(r.xmin()) + "," + y(r.ymin()) + " " + x(r.xmax()) + "," + y(r.ymin()) + " " +
           x(r.xmax()) + "," + y(r.ymax()) + " " + x(r.xmin()) + "," + y(r.ymax()) + "\"" + attrs + "/>";
  }

 private:
  RatRect square_;
  Rational size_;
  bool flip_;
};

std::string css_class(const std::string& style) {
  std::string out;
  for (char c : style) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    out += ok ? c : '_';
  }
  return out.empty() ? "overlay" : out;
}

// Sutherland-Hodgman against the half-plane sign·(x − y/4 − c) <= 0.
std::vector<RatPoint> clip_band_side(const std::vector<RatPoint>& poly, const Rational& c, int sign) {
  const auto f = [&](const RatPoint& p) { return Rational(sign) * (p.x - p.y / 4 - c); };
  std::vector<RatPoint> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const RatPoint& a = poly[i];
    const RatPoint& b = poly[(i + 1) % poly.size()];
    const Rational fa = f(a);
    const Rational fb = f(b);
    if (fa.sign() <= 0) out.push_back(a);
    if ((fa.sign() < 0 && fb.sign() > 0) || (fa.sign() > 0 && fb.sign() < 0)) {
      const Rational t = fa / (fa - fb);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

std::vector<RatPoint> band_polygon(const Strip& s, const RatRect& sq) {
  std::vector<RatPoint> poly = {{sq.xmin(), sq.ymin()}, {sq.xmax(), sq.ymin()}, {sq.xmax(), sq.ymax()}, {sq.xmin(), sq.ymax()}};
  poly = clip_band_side(poly, s.c_high(), 1);
  if (poly.empty()) return poly;
  return clip_band_side(poly, s.c_low(), -1);
}

}  // namespace

std::string render_svg(const Ifs& ifs, const RenderSpec& spec) {
  if (spec.canvas_size <= 0) throw InputError("render: canvas size must be positive");
  if (spec.depth < 0) throw InputError("render: depth must be non-negative");
  const auto cell_list = cells(ifs, spec.depth, spec.cap);
  const RatRect& sq = ifs.invariant_square();
  const Canvas canvas(sq, spec.canvas_size, spec.flip_y);
  const auto size = std::to_string(spec.canvas_size);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
     << "<style>\n"
     << "  .frame { fill: none; stroke: #555; stroke-dasharray: 6 4; }\n"
     << "  .cell { fill: #9ab; stroke: #123; stroke-width: 0.5; }\n"
     << "  .segment { stroke: #c22; stroke-width: 1.5; fill: none; }\n"
     << "  .strip { fill: #2a4; fill-opacity: 0.35; stroke: none; }\n"
     << "  .window { fill: none; stroke: #e80; stroke-width: 1.5; }\n"
     << "  .point { fill: #c22; }\n"
     << "</style>\n"
     << "<title>level-" << spec.depth << " cells (" << cell_list.size() << ")</title>\n";
  os << canvas.outline(sq, " class=\"frame\"") << "\n<g id=\"cells\">\n";
  for (const auto& c : cell_list) {
    std::string id = c.word.empty() ? "root" : c.word.to_string();
    for (auto& ch : id) {
      if (ch == '.') ch = '-';
    }
    os << canvas.rect(c.rect, " id=\"cell-" + id + "\" class=\"cell\"") << "\n";
  }
  os << "</g>\n<g id=\"overlays\">\n";
  for (const auto& overlay : spec.overlays) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          const auto cls = " class=\"" + css_class(o.style) + "\"";
          if constexpr (std::is_same_v<T, SegmentOverlay>) {
            os << "<line x1=\"" << canvas.x(o.segment.p().x) << "\" y1=\"" << canvas.y(o.segment.p().y) << "\" x2=\""
               << canvas.x(o.segment.q().x) << "\" y2=\"" << canvas.y(o.segment.q().y) << "\"" << cls << "/>\n";
          } else if constexpr (std::is_same_v<T, StripOverlay>) {
            const auto poly = band_polygon(o.strip, sq);
            if (poly.size() < 3) return;
            os << "<polygon points=\"";
            for (std::size_t i = 0; i < poly.size(); ++i) {
              os << (i ? " " : "") << canvas.x(poly[i].x) << "," << canvas.y(poly[i].y);
            }
            os << "\"" << cls << "/>\n";
          } else if constexpr (std::is_same_v<T, WindowOverlay>) {
            os << canvas.outline(o.window, cls) << "\n";
          } else {
            for (const auto& p : o.points) {
              os << "<circle cx=\"" << canvas.x(p.x) << "\" cy=\"" << canvas.y(p.y) << "\" r=\"2\"" << cls << "/>\n";
            }
          }
        },
        overlay);
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace ifscheck
