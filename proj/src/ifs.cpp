#include "ifscheck/ifs.hpp"

#include "ifscheck/errors.hpp"

#include <limits>
#include <sstream>

namespace ifscheck {

Similitude::Similitude(Rational ratio, RatPoint translation)
    : ratio_(std::move(ratio)), translation_(std::move(translation)), identity_(false) {
  if (ratio_.sign() <= 0 || ratio_ >= Rational(1)) {
    throw InputError("similitude: ratio must lie in (0, 1), got " + ratio_.to_string());
  }
}

Similitude Similitude::identity() { return Similitude(); }

RatPoint apply(const Similitude& f, const RatPoint& p) {
  if (f.is_identity()) return p;
  return f.ratio() * p + f.translation();
}

RatRect apply(const Similitude& f, const RatRect& r) {
  if (f.is_identity()) return r;
  const RatPoint lo = apply(f, RatPoint{r.xmin(), r.ymin()});
  const RatPoint hi = apply(f, RatPoint{r.xmax(), r.ymax()});
  return RatRect(lo.x, lo.y, hi.x, hi.y);
}

RatSegment apply(const Similitude& f, const RatSegment& s) {
  return RatSegment(apply(f, s.p()), apply(f, s.q()));
}

Similitude compose(const Similitude& f, const Similitude& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  return Similitude(f.ratio() * g.ratio(), f.ratio() * g.translation() + f.translation());
}

Word Word::prefix(std::size_t n) const {
  if (n > letters.size()) throw InputError("word: prefix longer than word");
  return Word{std::vector<int>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(n))};
}

std::string Word::to_string() const {
  if (letters.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i != 0) out += '.';
    out += std::to_string(letters[i]);
  }
  return out;
}

Word Word::parse(const std::string& text) {
  Word w;
  if (text == "-") return w;
  if (text.empty()) throw InputError("word: empty text; the empty word is \"-\"");
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) {
      throw InputError("word: malformed letter \"" + part + "\" in \"" + text + "\"");
    }
    w.letters.push_back(std::stoi(part));
    if (w.letters.back() < 1) throw InputError("word: letters start at 1 in \"" + text + "\"");
  }
  if (text.back() == '.') throw InputError("word: trailing '.' in \"" + text + "\"");
  return w;
}

Ifs::Ifs(std::vector<Similitude> maps, RatRect invariant_square)
    : maps_(std::move(maps)), square_(std::move(invariant_square)), nested_(true) {
  if (maps_.empty()) throw InputError("ifs: at least one map required");
  for (const auto& m : maps_) {
    if (m.is_identity()) throw InputError("ifs: the identity is not a contraction");
    if (!square_.contains(apply(m, square_))) nested_ = false;
  }
}

const Similitude& Ifs::map(int letter) const {
  if (letter < 1 || static_cast<std::size_t>(letter) > maps_.size()) {
    throw InputError("ifs: letter " + std::to_string(letter) + " out of range 1.." +
                     std::to_string(maps_.size()));
  }
  return maps_[static_cast<std::size_t>(letter - 1)];
}

Ifs homogeneous_ifs(const Rational& ratio, const std::vector<RatPoint>& translations,
                    RatRect invariant_square) {
  std::vector<Similitude> maps;
  maps.reserve(translations.size());
  for (const auto& a : translations) maps.emplace_back(ratio, a);
  return Ifs(std::move(maps), std::move(invariant_square));
}

const Ifs& paper_ifs() {
  static const Ifs instance = [] {
    // Columns of six cells; columns two and three drift right by 1/24 per
    // row, column one only from its fourth row on.
    const std::vector<RatPoint> a = {
        {0, 0},                   {0, rat(1, 6)},           {0, rat(1, 3)},
        {rat(1, 24), rat(1, 2)},  {rat(1, 12), rat(2, 3)},  {rat(1, 8), rat(5, 6)},
        {rat(1, 6), 0},           {rat(5, 24), rat(1, 6)},  {rat(1, 4), rat(1, 3)},
        {rat(7, 24), rat(1, 2)},  {rat(1, 3), rat(2, 3)},   {rat(3, 8), rat(5, 6)},
        {rat(5, 12), 0},          {rat(11, 24), rat(1, 6)}, {rat(1, 2), rat(1, 3)},
        {rat(13, 24), rat(1, 2)}, {rat(7, 12), rat(2, 3)},  {rat(5, 8), rat(5, 6)},
        {rat(5, 6), 0},           {rat(5, 6), rat(1, 6)},   {rat(5, 6), rat(1, 3)},
        {rat(5, 6), rat(1, 2)},   {rat(5, 6), rat(2, 3)},   {rat(5, 6), rat(5, 6)},
    };
    return homogeneous_ifs(rat(1, 6), a);
  }();
  return instance;
}

Ifs grid_ifs(int k) {
  if (k < 2) throw InputError("grid ifs: k must be at least 2");
  std::vector<RatPoint> a;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a.push_back({rat(i, k), rat(j, k)});
  }
  return homogeneous_ifs(rat(1, k), a);
}

Similitude word_map(const Ifs& ifs, const Word& w) {
  Similitude f = Similitude::identity();
  for (int letter : w.letters) f = compose(f, ifs.map(letter));
  return f;
}

std::uint64_t cell_count(const Ifs& ifs, int n) {
  std::uint64_t total = 1;
  const std::uint64_t m = ifs.size();
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / m) return std::numeric_limits<std::uint64_t>::max();
    total *= m;
  }
  return total;
}

std::vector<Cell> cells(const Ifs& ifs, int n, std::uint64_t cap) {
  if (n < 0) throw InputError("cells: depth must be non-negative");
  const std::uint64_t total = cell_count(ifs, n);
  if (total > cap) {
    throw CapExceeded("cells: " + std::to_string(ifs.size()) + "^" + std::to_string(n) +
                      " cells exceed the cap of " + std::to_string(cap) + "; use cells_pruned");
  }
  std::vector<std::pair<Word, Similitude>> level{{Word{}, Similitude::identity()}};
  for (int d = 0; d < n; ++d) {
    std::vector<std::pair<Word, Similitude>> next;
    next.reserve(level.size() * ifs.size());
    for (const auto& [w, f] : level) {
      for (int letter = 1; letter <= static_cast<int>(ifs.size()); ++letter) {
        Word child = w;
        child.letters.push_back(letter);
        next.emplace_back(std::move(child), compose(f, ifs.map(letter)));
      }
    }
    level = std::move(next);
  }
  std::vector<Cell> out;
  out.reserve(level.size());
  for (auto& [w, f] : level) out.push_back(Cell{std::move(w), apply(f, ifs.invariant_square())});
  return out;
}

namespace {

void descend(const Ifs& ifs, int remaining, const RatRect& window, Word& w, const Similitude& f,
             std::vector<Cell>& out) {
  RatRect rect = apply(f, ifs.invariant_square());
  const bool meets = rects_touch(rect, window);
  if (remaining == 0) {
    if (meets) out.push_back(Cell{w, std::move(rect)});
    return;
  }
  if (!meets && ifs.images_nested()) return;
  for (int letter = 1; letter <= static_cast<int>(ifs.size()); ++letter) {
    w.letters.push_back(letter);
    descend(ifs, remaining - 1, window, w, compose(f, ifs.map(letter)), out);
    w.letters.pop_back();
  }
}

}  // namespace

std::vector<Cell> cells_pruned(const Ifs& ifs, int n, const RatRect& window) {
  if (n < 0) throw InputError("cells_pruned: depth must be non-negative");
  std::vector<Cell> out;
  Word w;
  descend(ifs, n, window, w, Similitude::identity(), out);
  return out;
}

std::string OscReport::summary() const {
  std::ostringstream os;
  os << map_count << " maps, containment " << (containment() ? "OK" : "FAILED") << ", ";
  if (disjoint()) {
    os << pairs_checked << " pairs disjoint";
  } else {
    os << overlapping.size() << " of " << pairs_checked << " pairs overlap";
  }
  return os.str();
}

OscReport verify_osc(const Ifs& ifs) {
  OscReport report;
  report.map_count = ifs.size();
  std::vector<RatRect> images;
  images.reserve(ifs.size());
  for (int i = 1; i <= static_cast<int>(ifs.size()); ++i) {
    images.push_back(apply(ifs.map(i), ifs.invariant_square()));
    if (!ifs.invariant_square().contains(images.back())) report.uncontained.push_back(i);
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      ++report.pairs_checked;
      if (!rect_interiors_disjoint(images[i], images[j])) {
        report.overlapping.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
      }
    }
  }
  return report;
}

}  // namespace ifscheck
