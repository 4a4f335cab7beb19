#pragma once

// Arbitrary-precision reals on top of MPFR.
//
// Every HPReal carries its own binary precision. Binary operations produce a
// result at the larger of the two input precisions, rounded to nearest, so a
// value never silently loses precision by passing through an operation.

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace radical {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class HPReal {
 public:
  /// Zero at the given precision.
  explicit HPReal(long prec_bits);
  HPReal(long value, long prec_bits);

  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  static HPReal from_ratio(long num, long den, long prec_bits);
  /// Parses a decimal string ("1.25", "-3e-7"). Throws DomainError on junk.
  static HPReal parse(std::string_view text, long prec_bits);

  long prec_bits() const { return static_cast<long>(mpfr_get_prec(v_)); }

  /// Same value rounded (nearest) to a different precision.
  HPReal with_precision(long prec_bits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Binary exponent e with value = m * 2^e, 0.5 <= |m| < 1. Zero for zero.
  long exponent() const;

  HPReal& operator+=(const HPReal& rhs);
  HPReal& operator-=(const HPReal& rhs);
  HPReal& operator*=(const HPReal& rhs);
  HPReal& operator/=(const HPReal& rhs);
  HPReal& operator+=(long rhs);
  HPReal& operator-=(long rhs);
  HPReal& operator*=(long rhs);
  HPReal& operator/=(long rhs);

  HPReal operator-() const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw_mut() { return v_; }

 private:
  mpfr_t v_;
};

HPReal operator+(HPReal a, const HPReal& b);
HPReal operator-(HPReal a, const HPReal& b);
HPReal operator*(HPReal a, const HPReal& b);
HPReal operator/(HPReal a, const HPReal& b);
HPReal operator+(HPReal a, long b);
HPReal operator-(HPReal a, long b);
HPReal operator*(HPReal a, long b);
HPReal operator/(HPReal a, long b);
HPReal operator+(long a, HPReal b);
HPReal operator-(long a, const HPReal& b);
HPReal operator*(long a, HPReal b);
HPReal operator/(long a, const HPReal& b);

bool operator==(const HPReal& a, const HPReal& b);
std::partial_ordering operator<=>(const HPReal& a, const HPReal& b);
bool operator==(const HPReal& a, long b);
std::partial_ordering operator<=>(const HPReal& a, long b);

/// Bitwise identity: same precision and same value (signed zeros included).
bool identical(const HPReal& a, const HPReal& b);

HPReal sqrt(const HPReal& a);
HPReal ln(const HPReal& a);
HPReal cos(const HPReal& a);
HPReal abs(const HPReal& a);
HPReal pow(const HPReal& a, long n);
/// a * 2^e, exact.
HPReal ldexp(const HPReal& a, long e);
HPReal pi(long prec_bits);
HPReal max(const HPReal& a, const HPReal& b);
/// One unit in the last place of a at its own precision.
HPReal ulp(const HPReal& a);

enum class DecimalRounding { nearest, truncate };

/// Decimal rendering with `digits` significant digits. Fixed notation when
/// the decimal exponent lies in [-6, digits), scientific ("1.25e-30")
/// otherwise. `truncate` chops toward zero instead of rounding.
std::string to_decimal(const HPReal& a, int digits,
                       DecimalRounding mode = DecimalRounding::nearest);

/// Shortest digit count that makes to_decimal/parse lossless at prec_bits.
int round_trip_digits(long prec_bits);

/// Working-precision budget for an N-step iteration.
///   working_bits = ceil(target_digits * log2(10)) + guard_bits
/// with guard_bits >= 10 + ceil(log2(N + 1)).
struct PrecisionPolicy {
  int target_digits = 40;
  int guard_bits = 10;

  long working_bits() const;

  /// Minimal guard for the given iteration count.
  static int min_guard_bits(std::uint64_t iterations);
  static PrecisionPolicy for_iterations(int target_digits,
                                        std::uint64_t iterations);
  /// Throws DomainError unless target_digits > 0 and the guard covers N.
  void validate(std::uint64_t iterations) const;
};

}  // namespace radical
