#ifndef VECDOM_RATIONAL_H_
#define VECDOM_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace vecdom {

// Exact rational number, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t num, int64_t den = 1);  // NOLINT: implicit from integers

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  int64_t Floor() const;
  int64_t Ceil() const;
  bool IsInteger() const { return den_ == 1; }

  // Accepts "p/q" or a bare integer "p". Decimal notation is rejected.
  // Throws Error(kMalformed).
  static Rational Parse(std::string_view text);
  std::string ToString() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace vecdom

#endif  // VECDOM_RATIONAL_H_
