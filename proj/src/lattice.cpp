#include "ifscheck/lattice.hpp"

#include "ifscheck/errors.hpp"

#include <limits>
#include <numeric>

namespace ifscheck {

namespace {

using Int = Rational::Int;
__extension__ using Wide = __int128;

// Coordinates stay far below this so band values (4x − y) and comparisons
// against clamped window bounds never overflow.
constexpr std::int64_t kCoordLimit = std::int64_t{1} << 58;
constexpr std::int64_t kClamp = std::int64_t{1} << 61;

Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

std::int64_t clamp_to_i64(const Int& v) {
  if (v > kClamp) return kClamp;
  if (v < -kClamp) return -kClamp;
  return v.convert_to<std::int64_t>();
}

}  // namespace

LatticeFrame::LatticeFrame(const Ifs& ifs, int depth) : depth_(depth), alphabet_size_(ifs.size()) {
  if (depth < 0) throw InputError("lattice: depth must be non-negative");
  if (cell_count(ifs, depth) == std::numeric_limits<std::uint64_t>::max()) {
    throw InputError("lattice: word codes of depth " + std::to_string(depth) + " overflow 64 bits");
  }
  const auto& sq = ifs.invariant_square();
  Int translations(1), square(1), ratios(1);
  Rational reach(0);
  Rational max_ratio(0);
  for (const auto& m : ifs.maps()) {
    translations = lcm_int(translations, lcm_int(m.translation().x.denominator(), m.translation().y.denominator()));
    ratios = lcm_int(ratios, m.ratio().denominator());
    reach = max(reach, max(abs(m.translation().x), abs(m.translation().y)));
    max_ratio = max(max_ratio, m.ratio());
  }
  for (const auto* c : {&sq.xmin(), &sq.ymin(), &sq.xmax(), &sq.ymax()}) {
    square = lcm_int(square, c->denominator());
  }
  scale_ = translations * square * boost::multiprecision::pow(ratios, static_cast<unsigned>(depth));

  // Every cell lies within |t_w| + |square| <= reach / (1 − max ratio) + |square|.
  const Rational bound = reach / (Rational(1) - max_ratio) +
                         max(max(abs(sq.xmin()), abs(sq.xmax())), max(abs(sq.ymin()), abs(sq.ymax()))) + 1;
  if (Rational(scale_) * bound >= Rational(kCoordLimit)) {
    throw InputError("lattice: depth " + std::to_string(depth) + " needs a scale beyond 64-bit coordinates");
  }
}

std::int64_t LatticeFrame::exact(const Rational& r) const {
  const Rational scaled = r * Rational(scale_);
  if (!scaled.is_integer()) throw InputError("lattice: " + r.to_string() + " is not on the lattice");
  return clamp_to_i64(scaled.numerator());
}

Rational LatticeFrame::to_rational(std::int64_t v) const { return Rational(Int(v), scale_); }

RatRect LatticeFrame::to_rational(const LatticeRect& r) const {
  return RatRect(to_rational(r.x0), to_rational(r.y0), to_rational(r.x1), to_rational(r.y1));
}

LatticeInterval LatticeFrame::inner(const Rational& a, const Rational& b) const {
  const Rational s(scale_);
  return {clamp_to_i64((a * s).ceil()), clamp_to_i64((b * s).floor())};
}

LatticeInterval LatticeFrame::inner_band(const Rational& a, const Rational& b) const {
  const Rational s = Rational(scale_) * 4;
  return {clamp_to_i64((a * s).ceil()), clamp_to_i64((b * s).floor())};
}

Word LatticeFrame::word(std::uint64_t code) const {
  Word w;
  w.letters.resize(static_cast<std::size_t>(depth_));
  for (int i = depth_ - 1; i >= 0; --i) {
    w.letters[static_cast<std::size_t>(i)] = static_cast<int>(code % alphabet_size_) + 1;
    code /= alphabet_size_;
  }
  return w;
}

namespace {

struct MapData {
  std::int64_t num, den;  // ratio
  std::int64_t ax, ay;    // translation in lattice units
};

struct Walker {
  const std::vector<MapData>& maps;
  LatticeRect square;
  bool nested;
  const std::function<bool(const LatticeRect&)>& keep;
  const std::function<bool(const LatticeCell&)>& visit;

  static std::int64_t scaled(std::int64_t rn, std::int64_t rd, std::int64_t v) {
    const Wide p = static_cast<Wide>(rn) * v;
    if (p % rd != 0) throw ConsistencyError("lattice: coordinate fell off the lattice");
    return static_cast<std::int64_t>(p / rd);
  }

  // Returns false once the visitor asked to stop.
  bool walk(int remaining, std::uint64_t code, std::int64_t tx, std::int64_t ty, std::int64_t rn,
            std::int64_t rd) const {
    const LatticeRect rect{tx + scaled(rn, rd, square.x0), ty + scaled(rn, rd, square.y0),
                           tx + scaled(rn, rd, square.x1), ty + scaled(rn, rd, square.y1)};
    if (remaining == 0) {
      if (!keep(rect)) return true;
      return visit(LatticeCell{code, rect});
    }
    if (nested && !keep(rect)) return true;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const auto& m = maps[i];
      std::int64_t cn = rn * m.num;
      std::int64_t cd = rd * m.den;
      const std::int64_t g = std::gcd(cn, cd);
      cn /= g;
      cd /= g;
      if (!walk(remaining - 1, code * maps.size() + i, tx + scaled(rn, rd, m.ax), ty + scaled(rn, rd, m.ay), cn,
                cd)) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

void for_each_lattice_cell(const Ifs& ifs, const LatticeFrame& frame,
                           const std::function<bool(const LatticeRect&)>& keep,
                           const std::function<bool(const LatticeCell&)>& visit) {
  std::vector<MapData> maps;
  maps.reserve(ifs.size());
  for (const auto& m : ifs.maps()) {
    maps.push_back(MapData{m.ratio().numerator().convert_to<std::int64_t>(),
                           m.ratio().denominator().convert_to<std::int64_t>(), frame.exact(m.translation().x),
                           frame.exact(m.translation().y)});
  }
  const auto& sq = ifs.invariant_square();
  const LatticeRect square{frame.exact(sq.xmin()), frame.exact(sq.ymin()), frame.exact(sq.xmax()),
                           frame.exact(sq.ymax())};
  const Walker walker{maps, square, ifs.images_nested(), keep, visit};
  walker.walk(frame.depth(), 0, 0, 0, 1, 1);
}

std::vector<LatticeCell> lattice_cells(const Ifs& ifs, const LatticeFrame& frame, std::uint64_t cap) {
  const std::uint64_t total = cell_count(ifs, frame.depth());
  if (total > cap) {
    throw CapExceeded("cells: " + std::to_string(ifs.size()) + "^" + std::to_string(frame.depth()) +
                      " cells exceed the cap of " + std::to_string(cap));
  }
  std::vector<LatticeCell> out;
  out.reserve(static_cast<std::size_t>(total));
  for_each_lattice_cell(
      ifs, frame, [](const LatticeRect&) { return true; },
      [&](const LatticeCell& c) {
        out.push_back(c);
        return true;
      });
  return out;
}

std::vector<LatticeCell> lattice_cells_in(const Ifs& ifs, const LatticeFrame& frame, const RatRect& window) {
  const LatticeInterval xs = frame.inner(window.xmin(), window.xmax());
  const LatticeInterval ys = frame.inner(window.ymin(), window.ymax());
  std::vector<LatticeCell> out;
  for_each_lattice_cell(
      ifs, frame,
      [&](const LatticeRect& r) { return r.x0 <= xs.hi && r.x1 >= xs.lo && r.y0 <= ys.hi && r.y1 >= ys.lo; },
      [&](const LatticeCell& c) {
        out.push_back(c);
        return true;
      });
  return out;
}

}  // namespace ifscheck
