#pragma once

// Arbitrary-precision scalars shared by every other module.
//
// ExactRational is GMP's mpq_class (always canonical: reduced, positive
// denominator). Real is an MPFR value that carries its working precision in
// decimal digits; binary operations run at the larger of the two operand
// precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace vpt {

using BigInt = mpz_class;
using ExactRational = mpq_class;

inline constexpr int kDefaultWorkingDigits = 300;
inline constexpr int kDefaultOutputDigits = 25;
inline constexpr int kGuardDigits = 20;

struct PrecisionContext {
  int working_digits = kDefaultWorkingDigits;
  int output_digits = kDefaultOutputDigits;

  /// Throws DomainError unless both are positive and
  /// working_digits >= output_digits + kGuardDigits.
  void validate() const;
};

/// Canonical num/den; throws DomainError on a zero denominator.
ExactRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "p"; throws DomainError on malformed text.
ExactRational parse_rational(std::string_view text);

std::string to_string(const ExactRational& q);

/// MPFR bit precision used for a decimal working precision.
mpfr_prec_t digits_to_bits(int digits);

class Real {
 public:
  Real();
  Real(long value, int digits);
  Real(const BigInt& value, int digits);
  Real(const ExactRational& value, int digits);

  /// Decimal (or scientific) text; throws DomainError if it is not a number.
  static Real parse(std::string_view text, int digits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int precision_digits() const { return digits_; }

  /// Copy rounded (or exactly widened) to another precision.
  Real with_digits(int digits) const;

  double to_double() const;
  long round_to_long() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_finite() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);
  friend Real operator*(const Real& a, const BigInt& b);
  friend Real operator*(const Real& a, const ExactRational& b);

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b);
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  explicit Real(int digits);
  void widen_to(int digits);

  mpfr_t value_;
  int digits_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real fma(const Real& a, const Real& b, const Real& c);

/// x^(p/q) for x > 0, q > 0. Throws DomainError otherwise.
Real pow_rational_exponent(const Real& x, long p, long q);

/// Generalized binomial C((1-3j)/2, k), exact.
ExactRational binomial_half(long j, long k);

/// k(k-1)...(k-n+1); 1 for n = 0, 0 when n > k.
BigInt falling_factorial(long k, long n);

BigInt factorial(long n);

/// Decimal rendering with `significant` digits, round-half-even, positional
/// notation (no exponent). Zero renders as "0".
std::string to_fixed(const Real& x, int significant);

/// Same digits in d.ddd...e±XX form.
std::string to_scientific(const Real& x, int significant);

/// Splits the fractional part into groups of three ("0.667 986 259").
std::string group_digits(std::string_view fixed);

/// Number of leading significant decimal digits in which `value` agrees with
/// `reference`: floor(-log10(|value - reference| / |reference|)), clamped to
/// [0, cap]. Exact agreement returns cap.
int matching_digits(const Real& value, const Real& reference, int cap);

/// Neumaier-compensated running sum.
template <typename Value>
class CompensatedSum {
 public:
  explicit CompensatedSum(Value zero) : sum_(zero), compensation_(zero) {}

  void add(const Value& term) {
    Value t = sum_ + term;
    if (abs(sum_) >= abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = std::move(t);
  }

  Value value() const { return sum_ + compensation_; }

 private:
  Value sum_;
  Value compensation_;
};

}  // namespace vpt
