#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rectpack {

/// An exact element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// Every brick corner in the quadrant tiling is of the form dyadic * sqrt(2)^e,
/// and piece dimensions read from streams are rationals or rational multiples
/// of sqrt(2), so all coordinates the packers produce stay inside this field.
/// Comparisons are exact. A cached double approximation is used as a filter
/// and only falls back to the exact sign test when the two values are close.
class Length {
 public:
  Length() = default;
  Length(long value);  // NOLINT(google-explicit-constructor)
  Length(int value) : Length(static_cast<long>(value)) {}  // NOLINT
  Length(mpq_class rational, mpq_class sqrt2_coeff);
  explicit Length(mpq_class rational);

  /// Exact value of a finite double (every double is a dyadic rational).
  static Length from_double(double value);
  static Length ratio(long num, long den);
  /// sqrt(2)^exponent, exact for any integer exponent.
  static Length sqrt2_pow(int exponent);
  /// 2^exponent.
  static Length pow2(int exponent);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt2_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }

  double to_double() const { return approx_; }
  /// -1, 0 or +1.
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Length& operator+=(const Length& other);
  Length& operator-=(const Length& other);
  Length& operator*=(const Length& other);
  Length& operator/=(const Length& other);

  friend Length operator+(Length lhs, const Length& rhs) { return lhs += rhs; }
  friend Length operator-(Length lhs, const Length& rhs) { return lhs -= rhs; }
  friend Length operator*(Length lhs, const Length& rhs) { return lhs *= rhs; }
  friend Length operator/(Length lhs, const Length& rhs) { return lhs /= rhs; }
  Length operator-() const;

  friend bool operator==(const Length& lhs, const Length& rhs);
  friend std::strong_ordering operator<=>(const Length& lhs, const Length& rhs);

  /// Canonical exact form, e.g. "3/4", "1/2*sqrt2", "1+3*sqrt2", "-1/8*sqrt2".
  std::string to_string() const;

 private:
  void refresh_approx();

  mpq_class a_{0};
  mpq_class b_{0};
  double approx_ = 0.0;
  // |a| + sqrt2*|b|, bounds the rounding error of approx_ in relative terms.
  double scale_ = 0.0;
};

Length min(const Length& lhs, const Length& rhs);
Length max(const Length& lhs, const Length& rhs);

/// Sign of an exact a + b*sqrt(2).
int sign_of(const mpq_class& a, const mpq_class& b);

/// Parses a single exact length token: a decimal ("0.25", "1e-3"), a rational
/// ("3/8"), a sqrt2 multiple ("sqrt2", "1/2*sqrt2", "0.5*sqrt2") or a sum of a
/// rational and a sqrt2 multiple as printed by Length::to_string ("1+3*sqrt2").
/// Throws std::invalid_argument on malformed input.
Length parse_length(std::string_view token);

}  // namespace rectpack
