#include "rectpack/length.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rectpack {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
// Relative gap above which the double approximations decide a comparison.
constexpr double kFilterTolerance = 1e-9;

mpq_class pow2_rational(int exponent) {
  mpz_class p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return mpq_class(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  mpq_class q(mpz_class(1), p);
  q.canonicalize();
  return q;
}

// Decimal or p/q, no sqrt2.
mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class num = parse_rational(std::string_view(s).substr(0, slash));
    mpq_class den = parse_rational(std::string_view(s).substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number '" + s + "'");
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("malformed number '" + s + "'");
    std::string exp_text = s.substr(i + 1);
    if (exp_text.empty()) throw std::invalid_argument("malformed exponent in '" + s + "'");
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + s + "'");
    }
    if (used != exp_text.size() || std::labs(exponent) > 400) {
      throw std::invalid_argument("malformed exponent in '" + s + "'");
    }
  }
  mpq_class value{mpz_class(digits, 10)};
  long shift = exponent - frac_digits;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0) {
    value *= ten_pow;
  } else {
    value /= ten_pow;
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace

int sign_of(const mpq_class& a, const mpq_class& b) {
  int sa = sgn(a);
  int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // Opposite signs: compare a^2 with 2 b^2.
  mpq_class a2 = a * a;
  mpq_class b2 = 2 * b * b;
  int c = cmp(a2, b2);
  return sa > 0 ? c : -c;
}

Length::Length(long value) : a_(value), b_(0) { refresh_approx(); }

Length::Length(mpq_class rational, mpq_class sqrt2_coeff)
    : a_(std::move(rational)), b_(std::move(sqrt2_coeff)) {
  a_.canonicalize();
  b_.canonicalize();
  refresh_approx();
}

Length::Length(mpq_class rational) : Length(std::move(rational), mpq_class(0)) {}

Length Length::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite length");
  mpq_class q(value);
  return Length(q);
}

Length Length::ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Length(q);
}

Length Length::sqrt2_pow(int exponent) {
  // sqrt2^(2m) = 2^m, sqrt2^(2m+1) = 2^m * sqrt2.
  int half = exponent >= 0 ? exponent / 2 : -((-exponent + 1) / 2);
  bool odd = (exponent - 2 * half) != 0;
  mpq_class p = pow2_rational(half);
  return odd ? Length(mpq_class(0), p) : Length(p, mpq_class(0));
}

Length Length::pow2(int exponent) { return Length(pow2_rational(exponent)); }

void Length::refresh_approx() {
  double a = a_.get_d();
  double b = b_.get_d();
  approx_ = a + b * kSqrt2;
  scale_ = std::fabs(a) + std::fabs(b) * kSqrt2;
}

int Length::sign() const {
  if (approx_ > kFilterTolerance * scale_) return 1;
  if (approx_ < -kFilterTolerance * scale_) return -1;
  return sign_of(a_, b_);
}

Length& Length::operator+=(const Length& other) {
  a_ += other.a_;
  b_ += other.b_;
  refresh_approx();
  return *this;
}

Length& Length::operator-=(const Length& other) {
  a_ -= other.a_;
  b_ -= other.b_;
  refresh_approx();
  return *this;
}

Length& Length::operator*=(const Length& other) {
  mpq_class a = a_ * other.a_ + 2 * b_ * other.b_;
  mpq_class b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  refresh_approx();
  return *this;
}

Length& Length::operator/=(const Length& other) {
  // x / (c + d sqrt2) = x (c - d sqrt2) / (c^2 - 2 d^2); the norm is nonzero
  // for nonzero divisors since sqrt2 is irrational.
  mpq_class norm = other.a_ * other.a_ - 2 * other.b_ * other.b_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero length");
  mpq_class a = (a_ * other.a_ - 2 * b_ * other.b_) / norm;
  mpq_class b = (b_ * other.a_ - a_ * other.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  refresh_approx();
  return *this;
}

Length Length::operator-() const { return Length(-a_, -b_); }

bool operator==(const Length& lhs, const Length& rhs) {
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::strong_ordering operator<=>(const Length& lhs, const Length& rhs) {
  double gap = lhs.approx_ - rhs.approx_;
  double tol = kFilterTolerance * (lhs.scale_ + rhs.scale_);
  int s;
  if (gap > tol) {
    s = 1;
  } else if (gap < -tol) {
    s = -1;
  } else {
    mpq_class a = lhs.a_ - rhs.a_;
    mpq_class b = lhs.b_ - rhs.b_;
    s = sign_of(a, b);
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Length::to_string() const {
  bool has_a = sgn(a_) != 0;
  bool has_b = sgn(b_) != 0;
  if (!has_b) return a_.get_str();
  std::string out;
  if (has_a) out = a_.get_str();
  mpq_class mag = abs(b_);
  std::string coeff = mag == 1 ? std::string() : mag.get_str() + "*";
  if (sgn(b_) < 0) {
    out += "-";
  } else if (has_a) {
    out += "+";
  }
  out += coeff + "sqrt2";
  return out;
}

Length min(const Length& lhs, const Length& rhs) { return rhs < lhs ? rhs : lhs; }
Length max(const Length& lhs, const Length& rhs) { return lhs < rhs ? rhs : lhs; }

Length parse_length(std::string_view token) {
  std::string s = trim(token);
  if (s.empty()) throw std::invalid_argument("empty length");
  constexpr std::string_view kRoot = "sqrt2";
  if (s.size() < kRoot.size() || s.compare(s.size() - kRoot.size(), kRoot.size(), kRoot) != 0) {
    return Length(parse_rational(s));
  }
  // Split "<rational><+|-><coeff>*sqrt2": the last sign that is not leading and
  // not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  mpq_class rational(0);
  std::string root_term = s;
  if (split != std::string::npos) {
    rational = parse_rational(s.substr(0, split));
    root_term = s.substr(split);
  }
  std::string coeff_text = root_term.substr(0, root_term.size() - kRoot.size());
  mpq_class coeff(1);
  if (coeff_text.empty() || coeff_text == "+") {
    coeff = 1;
  } else if (coeff_text == "-") {
    coeff = -1;
  } else {
    if (coeff_text.back() != '*') throw std::invalid_argument("malformed sqrt2 term in '" + s + "'");
    coeff_text.pop_back();
    if (coeff_text == "+" || coeff_text == "-" || coeff_text.empty()) {
      throw std::invalid_argument("malformed sqrt2 term in '" + s + "'");
    }
    coeff = parse_rational(coeff_text);
  }
  return Length(rational, coeff);
}

}  // namespace rectpack
