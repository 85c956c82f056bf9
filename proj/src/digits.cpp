#include "ifscheck/digits.hpp"

#include "ifscheck/errors.hpp"

#include <algorithm>

namespace ifscheck {

std::string_view alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::C1: return "C1";
    case Alphabet::C2: return "C2";
    case Alphabet::Base6: return "Base6";
  }
  return "?";
}

int alphabet_size(Alphabet a) {
  switch (a) {
    case Alphabet::C1:
    case Alphabet::C2: return 2;
    case Alphabet::Base6: return 6;
  }
  return 0;
}

Rational digit_value(Alphabet a, std::uint8_t label) {
  if (label >= alphabet_size(a)) throw InputError("digit: label out of alphabet");
  if (a == Alphabet::C1) return label == 0 ? Rational(1) : rat(5, 2);
  return Rational(label);
}

char digit_letter(Alphabet a, std::uint8_t label) {
  if (label >= alphabet_size(a)) throw InputError("digit: label out of alphabet");
  if (a == Alphabet::C1) return label == 0 ? 'A' : 'B';
  return static_cast<char>('0' + label);
}

namespace {

std::uint8_t label_of(Alphabet a, char c) {
  if (a == Alphabet::C1) {
    if (c == 'A') return 0;
    if (c == 'B') return 1;
  } else if (c >= '0' && c - '0' < alphabet_size(a)) {
    return static_cast<std::uint8_t>(c - '0');
  }
  throw InputError(std::string("digit stream: letter '") + c + "' not in alphabet " +
                   std::string(alphabet_name(a)));
}

}  // namespace

DigitStream::DigitStream(Alphabet alphabet, std::vector<std::uint8_t> preperiod, std::vector<std::uint8_t> period)
    : alphabet_(alphabet), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw InputError("digit stream: period must be nonempty");
  const auto bad = [&](std::uint8_t d) { return d >= alphabet_size(alphabet_); };
  if (std::any_of(preperiod_.begin(), preperiod_.end(), bad) || std::any_of(period_.begin(), period_.end(), bad)) {
    throw InputError("digit stream: label out of alphabet " + std::string(alphabet_name(alphabet_)));
  }
}

DigitStream DigitStream::parse(Alphabet alphabet, std::string_view text) {
  const auto bar = text.find('|');
  if (bar != std::string_view::npos && text.find('|', bar + 1) != std::string_view::npos) {
    throw InputError("digit stream: more than one '|' in \"" + std::string(text) + "\"");
  }
  const auto pre_text = text.substr(0, bar);
  const auto period_text = bar == std::string_view::npos ? std::string_view{} : text.substr(bar + 1);
  std::vector<std::uint8_t> pre, period;
  for (char c : pre_text) pre.push_back(label_of(alphabet, c));
  for (char c : period_text) period.push_back(label_of(alphabet, c));
  if (period.empty()) period.push_back(0);
  return DigitStream(alphabet, std::move(pre), std::move(period));
}

DigitStream DigitStream::constant(Alphabet alphabet, std::uint8_t label) {
  return DigitStream(alphabet, {}, {label});
}

std::uint8_t DigitStream::label(std::size_t t) const {
  if (t == 0) throw InputError("digit stream: positions start at 1");
  if (t <= preperiod_.size()) return preperiod_[t - 1];
  return period_[(t - 1 - preperiod_.size()) % period_.size()];
}

std::string DigitStream::to_string() const {
  std::string out;
  for (auto d : preperiod_) out += digit_letter(alphabet_, d);
  out += '|';
  for (auto d : period_) out += digit_letter(alphabet_, d);
  return out;
}

bool operator==(const DigitStream& a, const DigitStream& b) {
  return a.alphabet_ == b.alphabet_ && stream_value(a) == stream_value(b);
}

Rational stream_value(const DigitStream& s) {
  const Rational sixth = rat(1, 6);
  Rational head(0);
  Rational scale(1);
  for (auto d : s.preperiod()) {
    scale *= sixth;
    head += digit_value(s.alphabet(), d) * scale;
  }
  // One period block P = Σ e_j 6^{-j}; the tail is P / (1 − 6^{-L}).
  Rational block(0);
  Rational block_scale(1);
  for (auto d : s.period()) {
    block_scale *= sixth;
    block += digit_value(s.alphabet(), d) * block_scale;
  }
  return head + scale * block / (Rational(1) - block_scale);
}

DigitStream x_of_z(const DigitStream& z) {
  if (z.alphabet() != Alphabet::C2) throw InputError("x_of_z: expected a C2 stream");
  // C2 digit 0 → B (5/2), 1 → A (1).
  const auto flip = [](std::vector<std::uint8_t> v) {
    for (auto& d : v) d = static_cast<std::uint8_t>(1 - d);
    return v;
  };
  return DigitStream(Alphabet::C1, flip(z.preperiod()), flip(z.period()));
}

DigitStream shift(const DigitStream& s) {
  if (!s.preperiod().empty()) {
    return DigitStream(s.alphabet(), std::vector<std::uint8_t>(s.preperiod().begin() + 1, s.preperiod().end()),
                       s.period());
  }
  auto period = s.period();
  std::rotate(period.begin(), period.begin() + 1, period.end());
  return DigitStream(s.alphabet(), {}, std::move(period));
}

DigitStream shift(const DigitStream& s, std::size_t k) {
  DigitStream out = s;
  const std::size_t drop = std::min(k, s.preperiod().size());
  if (drop != 0) {
    out = DigitStream(s.alphabet(),
                      std::vector<std::uint8_t>(s.preperiod().begin() + static_cast<std::ptrdiff_t>(drop),
                                                s.preperiod().end()),
                      s.period());
  }
  for (std::size_t i = 0, rest = (k - drop) % s.period().size(); i < rest; ++i) out = shift(out);
  return out;
}

Check check_xz_identity(const DigitStream& z) {
  const Rational lhs = stream_value(x_of_z(z)) - stream_value(x_of_z(shift(z))) / 6;
  const Rational rhs = (rat(-3, 2) * z.digit(1) + rat(5, 2)) / 6;
  return check_equal("x(z) - x(sigma z)/6 = (-(3/2)z_1 + 5/2)/6 for z=" + z.to_string(), lhs, rhs);
}

int lemma1_index(const Rational& x_digit, int y_digit) {
  if (x_digit != Rational(1) && x_digit != rat(5, 2)) {
    throw InputError("lemma1_index: x digit must be 1 or 5/2, got " + x_digit.to_string());
  }
  if (y_digit < 0 || y_digit > 5) throw InputError("lemma1_index: y digit must be in 0..5");
  return 6 * static_cast<int>(x_digit.floor()) + y_digit + 1;
}

bool AddressReport::within_bound() const {
  return abs(point_estimate.x - limit.x) <= error_bound && abs(point_estimate.y - limit.y) <= error_bound;
}

AddressReport lemma1_address(const DigitStream& x, const DigitStream& y, int n) {
  if (x.alphabet() != Alphabet::C1) throw InputError("lemma1_address: x must be a C1 stream");
  if (y.alphabet() != Alphabet::Base6) throw InputError("lemma1_address: y must be a Base6 stream");
  if (n < 1) throw InputError("lemma1_address: depth must be at least 1");

  AddressReport report;
  RatPoint partial{0, 0};
  Rational scale(1);  // 6^{-t+1}
  for (int t = 1; t <= n; ++t) {
    const Rational xt = x.digit(static_cast<std::size_t>(t));
    const int yt = y.label(static_cast<std::size_t>(t));
    report.word.letters.push_back(lemma1_index(xt, yt));
    partial = partial + scale * RatPoint{xt / 6 + rat(yt, 24), rat(yt, 6)};
    scale /= 6;
  }
  report.point_estimate = apply(word_map(paper_ifs(), report.word), RatPoint{0, 0});
  report.partial_sum_matches = report.point_estimate == partial;
  report.error_bound = inverse_power_of_six(static_cast<unsigned>(n));
  const Rational xv = stream_value(x);
  const Rational yv = stream_value(y);
  report.limit = RatPoint{xv + yv / 4, yv};
  return report;
}

DigitStream random_stream(Alphabet alphabet, std::mt19937_64& rng, std::size_t max_preperiod,
                          std::size_t max_period) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_preperiod);
  std::uniform_int_distribution<std::size_t> per_len(1, std::max<std::size_t>(1, max_period));
  std::uniform_int_distribution<int> digit(0, alphabet_size(alphabet) - 1);
  std::vector<std::uint8_t> pre(pre_len(rng)), period(per_len(rng));
  for (auto& d : pre) d = static_cast<std::uint8_t>(digit(rng));
  for (auto& d : period) d = static_cast<std::uint8_t>(digit(rng));
  return DigitStream(alphabet, std::move(pre), std::move(period));
}

int c2_letter(std::uint8_t digit) {
  if (digit > 1) throw InputError("c2_letter: digit must be 0 or 1");
  return digit + 1;
}

Word c2_word(const DigitStream& z, std::size_t n) {
  if (z.alphabet() != Alphabet::C2) throw InputError("c2_word: expected a C2 stream");
  Word w;
  for (std::size_t t = 1; t <= n; ++t) w.letters.push_back(c2_letter(z.label(t)));
  return w;
}

}  // namespace ifscheck
