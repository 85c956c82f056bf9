#pragma once

// Exact planar primitives over Rational. All predicates are closed-set
// predicates unless the name says "interiors".

#include "ifscheck/rational.hpp"

#include <iosfwd>
#include <string>

namespace ifscheck {

struct RatPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  friend RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend RatPoint operator*(const Rational& s, const RatPoint& p) { return {s * p.x, s * p.y}; }

  /// "(p/q, p/q)"
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const RatPoint& p);

/// Closed segment with distinct endpoints.
class RatSegment {
 public:
  /// Throws InputError when p == q.
  RatSegment(RatPoint p, RatPoint q);

  const RatPoint& p() const { return p_; }
  const RatPoint& q() const { return q_; }
  RatPoint direction() const { return q_ - p_; }
  /// "(p/q, p/q)-(p/q, p/q)".
  std::string to_string() const { return p_.to_string() + "-" + q_.to_string(); }

  friend bool operator==(const RatSegment&, const RatSegment&) = default;

 private:
  RatPoint p_;
  RatPoint q_;
};

/// Axis-aligned closed rectangle with positive width and height.
class RatRect {
 public:
  /// Throws InputError unless xmin < xmax and ymin < ymax.
  RatRect(Rational xmin, Rational ymin, Rational xmax, Rational ymax);

  static RatRect unit_square();
  /// Closed L-infinity ball of radius r > 0.
  static RatRect around(const RatPoint& center, const Rational& radius);

  const Rational& xmin() const { return xmin_; }
  const Rational& ymin() const { return ymin_; }
  const Rational& xmax() const { return xmax_; }
  const Rational& ymax() const { return ymax_; }
  Rational width() const { return xmax_ - xmin_; }
  Rational height() const { return ymax_ - ymin_; }

  bool contains(const RatPoint& p) const;
  bool contains(const RatRect& inner) const;

  friend bool operator==(const RatRect&, const RatRect&) = default;

  std::string to_string() const;

 private:
  Rational xmin_, ymin_, xmax_, ymax_;
};

/// open(a) ∩ open(b) = ∅.
bool rect_interiors_disjoint(const RatRect& a, const RatRect& b);

/// closed(a) ∩ closed(b) ≠ ∅; corner contact counts.
bool rects_touch(const RatRect& a, const RatRect& b);

/// Parallel directions and at least one shared endpoint, so s ∪ t is a segment.
bool segments_chain(const RatSegment& s, const RatSegment& t);

/// Closed segment meets closed rectangle (parametric clipping, exact).
bool segment_meets_rect(const RatSegment& s, const RatRect& r);

/// 2D cross product of two vectors.
Rational cross(const RatPoint& u, const RatPoint& v);

}  // namespace ifscheck
