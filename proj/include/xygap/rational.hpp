#ifndef XYGAP_RATIONAL_HPP
#define XYGAP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xygap::exact {

using BigInt = mpz_class;

/// Arbitrary-precision rational p/q, always canonical (lowest terms, q > 0).
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  ExactRational(std::int64_t num, std::int64_t den);
  explicit ExactRational(const BigInt& num, const BigInt& den = 1);
  explicit ExactRational(mpq_class value);

  /// Parses "p/q", "p" or a finite decimal literal such as "-0.125".
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigInt floor() const;
  ExactRational frac() const { return *this - ExactRational(floor()); }
  ExactRational abs() const;

  /// Canonical "p/q" form; integers are written with "/1".
  std::string str() const;
  /// Scientific decimal approximation with `digits` significant digits.
  /// Intended for humans only.
  std::string decimal(int digits = 17) const;
  double to_double() const { return value_.get_d(); }

  std::size_t numerator_bits() const;
  std::size_t denominator_bits() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// 2^exponent for any signed exponent.
ExactRational pow2(std::int64_t exponent);

/// Exact half of an integer, e.g. for quantum numbers N/2.
inline ExactRational half(std::int64_t n) { return ExactRational(n, 2); }

/// Bit length of |x| (0 for x == 0).
std::size_t bit_length(const BigInt& x);

}  // namespace xygap::exact

#endif  // XYGAP_RATIONAL_HPP
