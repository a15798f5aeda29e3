#include "vecdom/rational.h"

#include <charconv>
#include <numeric>

#include "vecdom/error.h"

namespace vecdom {
namespace {

int64_t ParseInt(std::string_view text, std::string_view whole) {
  int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kMalformed,
                "expected a rational p/q, got '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw Error(ErrorCode::kMalformed, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

int64_t Rational::Floor() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

int64_t Rational::Ceil() const {
  int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::Parse(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(text, text));
  const int64_t num = ParseInt(text.substr(0, slash), text);
  const int64_t den = ParseInt(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::kMalformed, "zero denominator in '" +
                                           std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

}  // namespace vecdom
