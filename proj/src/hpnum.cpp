#include "radical/hpnum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

namespace radical {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

void check_prec(long prec_bits) {
  if (prec_bits < MPFR_PREC_MIN || prec_bits > 1L << 24) {
    throw DomainError("precision out of range: " + std::to_string(prec_bits) +
                      " bits");
  }
}

// Raise dst's precision to at least `bits` without changing its value.
void widen(mpfr_ptr dst, mpfr_prec_t bits) {
  if (mpfr_get_prec(dst) < bits) mpfr_prec_round(dst, bits, kRound);
}

}  // namespace

HPReal::HPReal(long prec_bits) {
  check_prec(prec_bits);
  mpfr_init2(v_, prec_bits);
  mpfr_set_zero(v_, 1);
}

HPReal::HPReal(long value, long prec_bits) : HPReal(prec_bits) {
  mpfr_set_si(v_, value, kRound);
}

HPReal::HPReal(const HPReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRound);
}

HPReal::HPReal(HPReal&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRound);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::from_ratio(long num, long den, long prec_bits) {
  if (den == 0) throw DomainError("from_ratio: zero denominator");
  HPReal r(num, prec_bits);
  r /= den;
  return r;
}

HPReal HPReal::parse(std::string_view text, long prec_bits) {
  HPReal r(prec_bits);
  std::string s(text);
  // Accept the ellipsis marker used in human-readable output.
  if (auto pos = s.find("\xE2\x80\xA6"); pos != std::string::npos) s.erase(pos);
  while (!s.empty() && s.back() == '.') s.pop_back();
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, kRound);
  if (s.empty() || end == nullptr || *end != '\0' || end == s.c_str()) {
    throw DomainError("cannot parse decimal: '" + std::string(text) + "'");
  }
  return r;
}

HPReal HPReal::with_precision(long prec_bits) const {
  HPReal r(prec_bits);
  mpfr_set(r.v_, v_, kRound);
  return r;
}

long HPReal::exponent() const {
  if (!mpfr_regular_p(v_)) return 0;
  return static_cast<long>(mpfr_get_exp(v_));
}

HPReal& HPReal::operator+=(const HPReal& rhs) {
  widen(v_, mpfr_get_prec(rhs.v_));
  mpfr_add(v_, v_, rhs.v_, kRound);
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& rhs) {
  widen(v_, mpfr_get_prec(rhs.v_));
  mpfr_sub(v_, v_, rhs.v_, kRound);
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& rhs) {
  widen(v_, mpfr_get_prec(rhs.v_));
  mpfr_mul(v_, v_, rhs.v_, kRound);
  return *this;
}

HPReal& HPReal::operator/=(const HPReal& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  widen(v_, mpfr_get_prec(rhs.v_));
  mpfr_div(v_, v_, rhs.v_, kRound);
  return *this;
}

HPReal& HPReal::operator+=(long rhs) {
  mpfr_add_si(v_, v_, rhs, kRound);
  return *this;
}

HPReal& HPReal::operator-=(long rhs) {
  mpfr_sub_si(v_, v_, rhs, kRound);
  return *this;
}

HPReal& HPReal::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, kRound);
  return *this;
}

HPReal& HPReal::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_si(v_, v_, rhs, kRound);
  return *this;
}

HPReal HPReal::operator-() const {
  HPReal r(*this);
  mpfr_neg(r.v_, r.v_, kRound);
  return r;
}

HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
HPReal operator+(HPReal a, long b) { return a += b; }
HPReal operator-(HPReal a, long b) { return a -= b; }
HPReal operator*(HPReal a, long b) { return a *= b; }
HPReal operator/(HPReal a, long b) { return a /= b; }
HPReal operator+(long a, HPReal b) { return b += a; }
HPReal operator*(long a, HPReal b) { return b *= a; }

HPReal operator-(long a, const HPReal& b) {
  HPReal r(b.prec_bits());
  mpfr_si_sub(r.raw_mut(), a, b.raw(), kRound);
  return r;
}

HPReal operator/(long a, const HPReal& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  HPReal r(b.prec_bits());
  mpfr_si_div(r.raw_mut(), a, b.raw(), kRound);
  return r;
}

bool operator==(const HPReal& a, const HPReal& b) {
  return mpfr_equal_p(a.raw(), b.raw()) != 0;
}

std::partial_ordering operator<=>(const HPReal& a, const HPReal& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.raw(), b.raw());
  return c < 0   ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

bool operator==(const HPReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

std::partial_ordering operator<=>(const HPReal& a, long b) {
  if (mpfr_nan_p(a.raw())) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.raw(), b);
  return c < 0   ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

bool identical(const HPReal& a, const HPReal& b) {
  return a.prec_bits() == b.prec_bits() && mpfr_equal_p(a.raw(), b.raw()) &&
         mpfr_signbit(a.raw()) == mpfr_signbit(b.raw());
}

HPReal sqrt(const HPReal& a) {
  if (a.sign() < 0) throw DomainError("sqrt of negative value");
  HPReal r(a.prec_bits());
  mpfr_sqrt(r.raw_mut(), a.raw(), kRound);
  return r;
}

HPReal ln(const HPReal& a) {
  if (a.sign() <= 0) throw DomainError("ln of nonpositive value");
  HPReal r(a.prec_bits());
  mpfr_log(r.raw_mut(), a.raw(), kRound);
  return r;
}

HPReal cos(const HPReal& a) {
  HPReal r(a.prec_bits());
  mpfr_cos(r.raw_mut(), a.raw(), kRound);
  return r;
}

HPReal abs(const HPReal& a) {
  HPReal r(a.prec_bits());
  mpfr_abs(r.raw_mut(), a.raw(), kRound);
  return r;
}

HPReal pow(const HPReal& a, long n) {
  if (n < 0 && a.is_zero()) throw DomainError("negative power of zero");
  HPReal r(a.prec_bits());
  mpfr_pow_si(r.raw_mut(), a.raw(), n, kRound);
  return r;
}

HPReal ldexp(const HPReal& a, long e) {
  HPReal r(a.prec_bits());
  mpfr_mul_2si(r.raw_mut(), a.raw(), e, kRound);
  return r;
}

HPReal pi(long prec_bits) {
  HPReal r(prec_bits);
  mpfr_const_pi(r.raw_mut(), kRound);
  return r;
}

HPReal max(const HPReal& a, const HPReal& b) {
  HPReal r(std::max(a.prec_bits(), b.prec_bits()));
  mpfr_max(r.raw_mut(), a.raw(), b.raw(), kRound);
  return r;
}

HPReal ulp(const HPReal& a) {
  HPReal r(1, a.prec_bits());
  long e = a.is_zero() ? mpfr_get_emin() : a.exponent();
  return ldexp(r, e - a.prec_bits());
}

std::string to_decimal(const HPReal& a, int digits, DecimalRounding mode) {
  if (digits < 1) throw DomainError("to_decimal: digits must be positive");
  if (mpfr_nan_p(a.raw())) return "nan";
  if (mpfr_inf_p(a.raw())) return a.sign() < 0 ? "-inf" : "inf";
  if (a.is_zero()) {
    return digits == 1 ? "0" : "0." + std::string(static_cast<size_t>(digits - 1), '0');
  }
  mpfr_exp_t exp10 = 0;
  const mpfr_rnd_t rnd = mode == DecimalRounding::truncate ? MPFR_RNDZ : MPFR_RNDN;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), a.raw(), rnd),
      mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp10, so the leading digit has decimal exponent e.
  const long e = static_cast<long>(exp10) - 1;
  std::string out;
  if (e >= -6 && e < digits) {
    if (e >= 0) {
      out = mant.substr(0, static_cast<size_t>(e + 1));
      if (static_cast<long>(mant.size()) > e + 1) out += "." + mant.substr(static_cast<size_t>(e + 1));
    } else {
      out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + mant;
    }
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(e);
  }
  return sign + out;
}

int round_trip_digits(long prec_bits) {
  return static_cast<int>(mpfr_get_str_ndigits(10, static_cast<mpfr_prec_t>(prec_bits)));
}

long PrecisionPolicy::working_bits() const {
  return static_cast<long>(std::ceil(target_digits * std::log2(10.0))) + guard_bits;
}

int PrecisionPolicy::min_guard_bits(std::uint64_t iterations) {
  int lg = 0;
  // ceil(log2(N + 1))
  while (lg < 64 && (std::uint64_t{1} << lg) < iterations + 1) ++lg;
  return 10 + lg;
}

PrecisionPolicy PrecisionPolicy::for_iterations(int target_digits,
                                                std::uint64_t iterations) {
  PrecisionPolicy p{target_digits, min_guard_bits(iterations)};
  p.validate(iterations);
  return p;
}

void PrecisionPolicy::validate(std::uint64_t iterations) const {
  if (target_digits <= 0) throw DomainError("target_digits must be positive");
  if (guard_bits < min_guard_bits(iterations)) {
    throw DomainError("guard_bits " + std::to_string(guard_bits) +
                      " below budget " + std::to_string(min_guard_bits(iterations)) +
                      " for " + std::to_string(iterations) + " iterations");
  }
}

}  // namespace radical
