#include "vpt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "vpt/errors.hpp"

namespace vpt {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;
constexpr mpfr_prec_t kGuardBits = 16;

void require_digits(int digits) {
  if (digits <= 0) throw DomainError("precision must be a positive number of digits");
}

}  // namespace

void PrecisionContext::validate() const {
  if (working_digits <= 0 || output_digits <= 0) {
    throw DomainError("precision digits must be positive");
  }
  if (working_digits < output_digits + kGuardDigits) {
    throw DomainError("working digits must exceed output digits by at least " +
                      std::to_string(kGuardDigits));
  }
}

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num_text(text.substr(0, slash));
  const std::string den_text = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto is_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!is_integer(num_text) || !is_integer(den_text) || den_text[0] == '-' || den_text[0] == '+') {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  const std::string num_clean = num_text[0] == '+' ? num_text.substr(1) : num_text;
  return make_rational(BigInt(num_clean, 10), BigInt(den_text, 10));
}

std::string to_string(const ExactRational& q) {
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

mpfr_prec_t digits_to_bits(int digits) {
  require_digits(digits);
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + kGuardBits;
}

// --- Real -------------------------------------------------------------------

Real::Real(int digits) : digits_(digits) {
  require_digits(digits);
  mpfr_init2(value_, digits_to_bits(digits));
}

Real::Real() : Real(kDefaultWorkingDigits) { mpfr_set_zero(value_, 1); }

Real::Real(long value, int digits) : Real(digits) { mpfr_set_si(value_, value, kRound); }

Real::Real(const BigInt& value, int digits) : Real(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real::Real(const ExactRational& value, int digits) : Real(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Real Real::parse(std::string_view text, int digits) {
  Real r(digits);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(r.value_, s.c_str(), 10, kRound) != 0) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

Real::Real(const Real& other) : Real(other.digits_) { mpfr_set(value_, other.value_, kRound); }

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_digits(int digits) const {
  Real r(digits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

void Real::widen_to(int digits) {
  if (digits > digits_) {
    mpfr_prec_round(value_, digits_to_bits(digits), kRound);
    digits_ = digits;
  }
}

double Real::to_double() const { return mpfr_get_d(value_, kRound); }

long Real::round_to_long() const { return mpfr_get_si(value_, MPFR_RNDNA); }

int Real::sign() const { return mpfr_sgn(value_); }

bool Real::is_finite() const { return mpfr_number_p(value_) != 0; }

Real& Real::operator+=(const Real& rhs) {
  widen_to(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

Real operator-(const Real& x) {
  Real r(x.digits_);
  mpfr_neg(r.value_, x.value_, kRound);
  return r;
}

#define VPT_REAL_BINARY(op, fn)                          \
  Real operator op(const Real& a, const Real& b) {       \
    Real r(std::max(a.digits_, b.digits_));              \
    fn(r.value_, a.value_, b.value_, kRound);            \
    return r;                                            \
  }

VPT_REAL_BINARY(+, mpfr_add)
VPT_REAL_BINARY(-, mpfr_sub)
VPT_REAL_BINARY(*, mpfr_mul)
VPT_REAL_BINARY(/, mpfr_div)
#undef VPT_REAL_BINARY

Real operator+(const Real& a, long b) {
  Real r(a.digits_);
  mpfr_add_si(r.value_, a.value_, b, kRound);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.digits_);
  mpfr_sub_si(r.value_, a.value_, b, kRound);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.digits_);
  mpfr_si_sub(r.value_, a, b.value_, kRound);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.digits_);
  mpfr_mul_si(r.value_, a.value_, b, kRound);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.digits_);
  mpfr_div_si(r.value_, a.value_, b, kRound);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.digits_);
  mpfr_si_div(r.value_, a, b.value_, kRound);
  return r;
}

Real operator*(const Real& a, const BigInt& b) {
  Real r(a.digits_);
  mpfr_mul_z(r.value_, a.value_, b.get_mpz_t(), kRound);
  return r;
}

Real operator*(const Real& a, const ExactRational& b) {
  Real r(a.digits_);
  mpfr_mul_q(r.value_, a.value_, b.get_mpq_t(), kRound);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0 && !mpfr_nan_p(a.value_); }

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

// --- elementary functions -----------------------------------------------------

Real abs(const Real& x) {
  Real r = x;
  mpfr_abs(r.get(), x.get(), kRound);
  return r;
}

Real sqrt(const Real& x) {
  Real r = x;
  mpfr_sqrt(r.get(), x.get(), kRound);
  return r;
}

Real cbrt(const Real& x) {
  Real r = x;
  mpfr_cbrt(r.get(), x.get(), kRound);
  return r;
}

Real log(const Real& x) {
  Real r = x;
  mpfr_log(r.get(), x.get(), kRound);
  return r;
}

Real exp(const Real& x) {
  Real r = x;
  mpfr_exp(r.get(), x.get(), kRound);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = x;
  mpfr_pow_si(r.get(), x.get(), n, kRound);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = x + y;  // carries the wider precision
  mpfr_pow(r.get(), x.get(), y.get(), kRound);
  return r;
}

Real fma(const Real& a, const Real& b, const Real& c) {
  Real r = a * b;
  mpfr_fma(r.get(), a.get(), b.get(), c.get(), kRound);
  return r;
}

Real pow_rational_exponent(const Real& x, long p, long q) {
  if (q <= 0) throw DomainError("pow_rational_exponent: denominator must be positive");
  if (x.sign() <= 0) throw DomainError("pow_rational_exponent: base must be positive");
  // Root and power are evaluated with extra digits, then rounded once.
  const int digits = x.precision_digits();
  const Real wide = x.with_digits(digits + 10);
  Real root = wide;
  mpfr_rootn_ui(root.get(), wide.get(), static_cast<unsigned long>(q), kRound);
  return pow(root, p).with_digits(digits);
}

ExactRational binomial_half(long j, long k) {
  if (j < 0 || k < 0) throw DomainError("binomial_half: arguments must be non-negative");
  const ExactRational a = make_rational(1 - 3 * j, 2);
  ExactRational c(1);
  for (long m = 0; m < k; ++m) {
    c *= a - m;
    c /= m + 1;
  }
  return c;
}

BigInt falling_factorial(long k, long n) {
  if (n < 0) throw DomainError("falling_factorial: n must be non-negative");
  BigInt r(1);
  for (long m = 0; m < n; ++m) r *= k - m;
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// --- rendering ----------------------------------------------------------------

namespace {

struct DecimalDigits {
  bool negative = false;
  std::string digits;  // significant digits, no sign
  long exponent = 0;   // value = 0.digits * 10^exponent
};

DecimalDigits decimal_digits(const Real& x, int significant) {
  if (significant <= 0) throw DomainError("significant digits must be positive");
  if (!x.is_finite()) throw DomainError("cannot render a non-finite value");
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(significant), x.get(), kRound);
  std::string s(raw);
  mpfr_free_str(raw);
  DecimalDigits d;
  if (!s.empty() && s[0] == '-') {
    d.negative = true;
    s.erase(0, 1);
  }
  d.digits = std::move(s);
  d.exponent = exponent;
  return d;
}

}  // namespace

std::string to_fixed(const Real& x, int significant) {
  if (x.is_zero()) return "0";
  const DecimalDigits d = decimal_digits(x, significant);
  std::string out = d.negative ? "-" : "";
  if (d.exponent <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-d.exponent), '0');
    out += d.digits;
  } else if (static_cast<std::size_t>(d.exponent) >= d.digits.size()) {
    out += d.digits;
    out.append(static_cast<std::size_t>(d.exponent) - d.digits.size(), '0');
  } else {
    out += d.digits.substr(0, static_cast<std::size_t>(d.exponent));
    out += '.';
    out += d.digits.substr(static_cast<std::size_t>(d.exponent));
  }
  return out;
}

std::string to_scientific(const Real& x, int significant) {
  if (x.is_zero()) return "0";
  const DecimalDigits d = decimal_digits(x, significant);
  std::string out = d.negative ? "-" : "";
  out += d.digits.substr(0, 1);
  if (d.digits.size() > 1) out += "." + d.digits.substr(1);
  const long e = d.exponent - 1;
  out += e < 0 ? "e-" : "e+";
  const std::string mag = std::to_string(e < 0 ? -e : e);
  out += (mag.size() < 2 ? "0" : "") + mag;
  return out;
}

std::string group_digits(std::string_view fixed) {
  const auto dot = fixed.find('.');
  if (dot == std::string_view::npos) return std::string(fixed);
  std::string out(fixed.substr(0, dot + 1));
  const std::string_view frac = fixed.substr(dot + 1);
  for (std::size_t i = 0; i < frac.size(); ++i) {
    if (i > 0 && i % 3 == 0) out += ' ';
    out += frac[i];
  }
  return out;
}

int matching_digits(const Real& value, const Real& reference, int cap) {
  const Real diff = abs(value - reference);
  if (diff.is_zero()) return cap;
  if (reference.is_zero()) return 0;
  const Real rel = diff / abs(reference);
  const double digits = -std::log10(rel.to_double());
  if (!std::isfinite(digits)) {
    // Underflows double range: fall back to the MPFR logarithm.
    const Real l = log(rel) / log(Real(10, rel.precision_digits()));
    return std::clamp(static_cast<int>(std::floor(-l.to_double())), 0, cap);
  }
  return std::clamp(static_cast<int>(std::floor(digits)), 0, cap);
}

}  // namespace vpt
