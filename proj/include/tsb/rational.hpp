#ifndef TSB_RATIONAL_HPP
#define TSB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tsb {

/// Exact arbitrary-precision fraction, always held in lowest terms with a
/// positive denominator. Zero is 0/1.
///
/// Canonical text form is "p/q" (q >= 2) or "p" when the denominator is 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  /// Throws std::domain_error when den == 0.
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  /// Parses "p", "-p", "p/q" (any sign placement on p, q > 0 after sign
  /// normalization). Non-reduced input is accepted and reduced. Throws
  /// std::invalid_argument on malformed text, std::domain_error on q == 0.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

/// a^k for k >= 0.
Rational pow(const Rational& base, int exponent);

/// n! as an exact integer-valued Rational. Throws std::invalid_argument for n < 0.
Rational factorial(int n);

}  // namespace tsb

#endif  // TSB_RATIONAL_HPP
