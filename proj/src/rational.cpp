#include "ifscheck/rational.hpp"

#include "ifscheck/errors.hpp"

#include <ostream>

namespace ifscheck {

namespace mp = boost::multiprecision;

Rational::Rational(const Int& n, const Int& d) {
  if (d == 0) throw InputError("rational: zero denominator");
  v_ = mp::mpq_rational(n, d);
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Rational::Int parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Rational::Int(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw InputError("rational: malformed numerator in \"" + std::string(text) + "\"");
  }
  if (slash == std::string_view::npos) return Rational(parse_int(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text)) {
    throw InputError("rational: malformed denominator in \"" + std::string(text) + "\"");
  }
  return Rational(parse_int(num_text), parse_int(den_text));
}

Rational::Int Rational::numerator() const { return mp::numerator(v_); }
Rational::Int Rational::denominator() const { return mp::denominator(v_); }

bool Rational::is_zero() const { return v_.is_zero(); }
bool Rational::is_integer() const { return mp::denominator(v_) == 1; }
int Rational::sign() const { return v_.sign(); }

Rational::Int Rational::floor() const {
  Int q, r;
  mp::divide_qr(mp::numerator(v_), mp::denominator(v_), q, r);
  // divide_qr truncates toward zero.
  if (r != 0 && v_.sign() < 0) q -= 1;
  return q;
}

Rational::Int Rational::ceil() const {
  Int q, r;
  mp::divide_qr(mp::numerator(v_), mp::denominator(v_), q, r);
  if (r != 0 && v_.sign() > 0) q += 1;
  return q;
}

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::to_string() const {
  return mp::numerator(v_).str() + "/" + mp::denominator(v_).str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mp::mpq_rational(-v_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = a.v_.compare(b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational rat(long long n, long long d) { return Rational(Rational::Int(n), Rational::Int(d)); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow(const Rational& base, unsigned exp) {
  Rational result(1);
  Rational b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

Rational inverse_power_of_six(unsigned n) {
  return Rational(Rational::Int(1), mp::pow(Rational::Int(6), n));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace ifscheck
