#pragma once

/**
 * @file digits.hpp
 * @brief Eventually periodic base-6 digit streams and the digit addressing
 *        that places slope-4 segments inside the carpet.
 *
 * Three alphabets share one representation:
 *   - C1:    labels A (value 1) and B (value 5/2), the Cantor set generated by
 *            {x/6 + 1/6, x/6 + 5/12};
 *   - C2:    digits 0 and 1, the Cantor set generated by {x/6, x/6 + 1/6};
 *   - Base6: digits 0..5, an ordinary base-6 expansion of a point of [0, 1].
 *
 * A stream denotes Σ_{t≥1} d_t 6^{-t}. Text form is "preperiod|period", e.g.
 * "01|10" over C2 or "A|B" over C1. A missing bar or an empty period denotes a
 * finite expansion, padded with the alphabet's smallest digit.
 */

#include "ifscheck/ifs.hpp"
#include "ifscheck/report.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ifscheck {

enum class Alphabet { C1, C2, Base6 };

std::string_view alphabet_name(Alphabet a);
/// Number of labels in the alphabet.
int alphabet_size(Alphabet a);
/// Numeric value of a digit label.
Rational digit_value(Alphabet a, std::uint8_t label);
char digit_letter(Alphabet a, std::uint8_t label);

class DigitStream {
 public:
  /// Throws InputError on an empty period or a label outside the alphabet.
  DigitStream(Alphabet alphabet, std::vector<std::uint8_t> preperiod, std::vector<std::uint8_t> period);

  /// Throws InputError on bad syntax or letters outside the alphabet.
  static DigitStream parse(Alphabet alphabet, std::string_view text);
  static DigitStream constant(Alphabet alphabet, std::uint8_t label);

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<std::uint8_t>& preperiod() const { return preperiod_; }
  const std::vector<std::uint8_t>& period() const { return period_; }

  /// Label of the t-th digit, t >= 1.
  std::uint8_t label(std::size_t t) const;
  /// Value of the t-th digit, t >= 1.
  Rational digit(std::size_t t) const { return digit_value(alphabet_, label(t)); }

  std::string to_string() const;

  /// Same alphabet and same value; dual base-6 expansions compare equal.
  friend bool operator==(const DigitStream& a, const DigitStream& b);

 private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> preperiod_;
  std::vector<std::uint8_t> period_;
};

/// Exact value: preperiod sum plus the geometric series of the period.
Rational stream_value(const DigitStream& s);

/// Digitwise 0 ↦ 5/2, 1 ↦ 1 from C2 to C1. Throws InputError for other alphabets.
DigitStream x_of_z(const DigitStream& z);

/// Left shift: drops the first digit.
DigitStream shift(const DigitStream& s);
/// k-fold left shift.
DigitStream shift(const DigitStream& s, std::size_t k);

/// x(z) − x(σz)/6 against (−(3/2)z_1 + 5/2)/6.
Check check_xz_identity(const DigitStream& z);

/// Map index 6⌊x_t⌋ + y_t + 1 (in 7..18). Throws InputError outside {1, 5/2} × {0..5}.
int lemma1_index(const Rational& x_digit, int y_digit);

struct AddressReport {
  Word word;
  RatPoint point_estimate;  ///< word_map(word)(0, 0)
  Rational error_bound;     ///< per-coordinate bound 6^{-n}
  RatPoint limit;           ///< (x + y/4, y)
  /// point_estimate == Σ_{t≤n} 6^{-t+1}(x_t/6 + y_t/24, y_t/6), checked exactly.
  bool partial_sum_matches = false;

  /// Per-coordinate |point_estimate − limit| <= error_bound.
  bool within_bound() const;
};

/// Address of (x + y/4, y) at depth n >= 1 in the 24-map carpet.
AddressReport lemma1_address(const DigitStream& x, const DigitStream& y, int n);

/// Random stream with preperiod length in [0, max_preperiod] and period length
/// in [1, max_period].
DigitStream random_stream(Alphabet alphabet, std::mt19937_64& rng, std::size_t max_preperiod = 6,
                          std::size_t max_period = 6);

/// Letter of φ_1/φ_2 encoding a C2 digit: 0 → 1, 1 → 2.
int c2_letter(std::uint8_t digit);

/// The word z_1 ⋯ z_n over letters {1, 2}.
Word c2_word(const DigitStream& z, std::size_t n);

}  // namespace ifscheck
