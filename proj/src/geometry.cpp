#include "ifscheck/geometry.hpp"

#include "ifscheck/errors.hpp"

#include <ostream>
#include <utility>

namespace ifscheck {

std::string RatPoint::to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

std::ostream& operator<<(std::ostream& os, const RatPoint& p) { return os << p.to_string(); }

RatSegment::RatSegment(RatPoint p, RatPoint q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == q_) throw InputError("segment: degenerate (p == q) at " + p_.to_string());
}

RatRect::RatRect(Rational xmin, Rational ymin, Rational xmax, Rational ymax)
    : xmin_(std::move(xmin)), ymin_(std::move(ymin)), xmax_(std::move(xmax)), ymax_(std::move(ymax)) {
  if (!(xmin_ < xmax_) || !(ymin_ < ymax_)) {
    throw InputError("rect: empty or inverted extent " + to_string());
  }
}

RatRect RatRect::unit_square() { return RatRect(0, 0, 1, 1); }

RatRect RatRect::around(const RatPoint& center, const Rational& radius) {
  if (radius.sign() <= 0) throw InputError("rect: radius must be positive");
  return RatRect(center.x - radius, center.y - radius, center.x + radius, center.y + radius);
}

bool RatRect::contains(const RatPoint& p) const {
  return xmin_ <= p.x && p.x <= xmax_ && ymin_ <= p.y && p.y <= ymax_;
}

bool RatRect::contains(const RatRect& inner) const {
  return xmin_ <= inner.xmin_ && inner.xmax_ <= xmax_ && ymin_ <= inner.ymin_ && inner.ymax_ <= ymax_;
}

std::string RatRect::to_string() const {
  return "[" + xmin_.to_string() + ", " + xmax_.to_string() + "]x[" + ymin_.to_string() + ", " +
         ymax_.to_string() + "]";
}

bool rect_interiors_disjoint(const RatRect& a, const RatRect& b) {
  return a.xmax() <= b.xmin() || b.xmax() <= a.xmin() || a.ymax() <= b.ymin() || b.ymax() <= a.ymin();
}

bool rects_touch(const RatRect& a, const RatRect& b) {
  return a.xmin() <= b.xmax() && b.xmin() <= a.xmax() && a.ymin() <= b.ymax() && b.ymin() <= a.ymax();
}

Rational cross(const RatPoint& u, const RatPoint& v) { return u.x * v.y - u.y * v.x; }

bool segments_chain(const RatSegment& s, const RatSegment& t) {
  if (!cross(s.direction(), t.direction()).is_zero()) return false;
  return s.p() == t.p() || s.p() == t.q() || s.q() == t.p() || s.q() == t.q();
}

namespace {

// Narrows [lo, hi] to the parameters t with lo_edge <= start + t*delta <= hi_edge.
bool clip_axis(const Rational& start, const Rational& delta, const Rational& lo_edge,
               const Rational& hi_edge, Rational& lo, Rational& hi) {
  if (delta.is_zero()) return lo_edge <= start && start <= hi_edge;
  Rational t0 = (lo_edge - start) / delta;
  Rational t1 = (hi_edge - start) / delta;
  if (t1 < t0) std::swap(t0, t1);
  lo = max(lo, t0);
  hi = min(hi, t1);
  return lo <= hi;
}

}  // namespace

bool segment_meets_rect(const RatSegment& s, const RatRect& r) {
  Rational lo(0);
  Rational hi(1);
  const RatPoint d = s.direction();
  return clip_axis(s.p().x, d.x, r.xmin(), r.xmax(), lo, hi) &&
         clip_axis(s.p().y, d.y, r.ymin(), r.ymax(), lo, hi);
}

}  // namespace ifscheck
