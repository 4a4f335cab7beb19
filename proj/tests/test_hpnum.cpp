#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "radical/hpnum.hpp"

using namespace radical;

namespace {

HPReal phi(long bits) { return (1 + sqrt(HPReal(5, bits))) / 2; }

// Random positive value spanning 10^lo .. 10^hi, log-uniformly.
HPReal random_positive(std::mt19937_64& rng, long bits, int lo, int hi) {
  std::uniform_int_distribution<long> mant(1'000'000, 9'999'999);
  std::uniform_int_distribution<int> expo(lo, hi - 1);
  HPReal x = HPReal::from_ratio(mant(rng), 1'000'000, bits);
  const int e = expo(rng);
  const HPReal ten(10, bits);
  return e >= 0 ? x * pow(ten, e) : x / pow(ten, -e);
}

}  // namespace

TEST_CASE("exact small-integer arithmetic") {
  const HPReal one(1, 64);
  CHECK(one + one == 2);
  CHECK(HPReal(7, 64) * HPReal(6, 64) == 42);
  CHECK(HPReal(9, 64) - 10 == -1);
  CHECK(sqrt(HPReal(4, 64)) == 2);
  CHECK(ln(HPReal(1, 64)).is_zero());
}

TEST_CASE("result precision is the maximum of the inputs") {
  const HPReal a(3, 80);
  const HPReal b(5, 200);
  CHECK((a + b).prec_bits() == 200);
  CHECK((b * a).prec_bits() == 200);
  CHECK((a / b).prec_bits() == 200);
  CHECK((a - 1).prec_bits() == 80);
  CHECK(sqrt(a).prec_bits() == 80);
  CHECK(a.with_precision(300).prec_bits() == 300);
}

TEST_CASE("golden-ratio identities") {
  constexpr long bits = 200;
  const HPReal p = phi(bits);
  const HPReal tol = ldexp(HPReal(1, bits), -(bits - 5));
  CHECK(abs(p * p - p - 1) < tol);
  CHECK(abs(1 / p - (p - 1)) < tol);
  CHECK(abs(sqrt(1 + p) - p) < tol);
  CHECK(abs(pow(2 * p, 2) - 4 * p * p) < tol * 16);
}

TEST_CASE("domain errors") {
  const HPReal zero(64);
  CHECK_THROWS_AS(HPReal(1, 64) / zero, DomainError);
  CHECK_THROWS_AS(HPReal(1, 64) / 0L, DomainError);
  CHECK_THROWS_AS(sqrt(HPReal(-1, 64)), DomainError);
  CHECK_THROWS_AS(ln(zero), DomainError);
  CHECK_THROWS_AS(ln(HPReal(-2, 64)), DomainError);
  CHECK_THROWS_AS(HPReal(2, 0), DomainError);
}

TEST_CASE("sqrt(2) agrees with the digit-by-digit oracle") {
  const std::string expected = oracle::sqrt_digits(2, 60);
  CHECK(expected.substr(0, 22) == "1.41421356237309504880");
  const std::string got =
      to_decimal(sqrt(HPReal(2, 256)), 61, DecimalRounding::truncate);
  CHECK(got == expected);
}

TEST_CASE("pi agrees with Machin's formula") {
  const std::string expected = oracle::pi_digits(80);
  CHECK(expected.substr(0, 22) == "3.14159265358979323846");
  CHECK(to_decimal(pi(320), 81, DecimalRounding::truncate) == expected);
  CHECK(to_decimal(pi(80), 21) == "3.14159265358979323846");
}

TEST_CASE("to_decimal formatting") {
  CHECK(to_decimal(HPReal(1, 64), 5) == "1.0000");
  CHECK(to_decimal(HPReal::from_ratio(1, 4, 64), 4) == "0.2500");
  CHECK(to_decimal(HPReal::from_ratio(-1, 3, 64), 6) == "-0.333333");
  CHECK(to_decimal(HPReal::from_ratio(2, 3, 64), 6) == "0.666667");
  CHECK(to_decimal(HPReal::from_ratio(2, 3, 64), 6, DecimalRounding::truncate) == "0.666666");
  CHECK(to_decimal(ldexp(HPReal(1, 128), -100), 3) == "7.89e-31");
  CHECK(to_decimal(HPReal(123456, 64), 3) == "1.23e5");
  CHECK(to_decimal(HPReal(64), 5) == "0.0000");
}

TEST_CASE("parse accepts published digit strings") {
  const HPReal a = HPReal::parse("1.0986419643941564857346689....", 128);
  CHECK(to_decimal(a, 26) == "1.0986419643941564857346689");
  const HPReal b = HPReal::parse("0.8232354508791921603541165…", 128);
  CHECK(to_decimal(b, 25) == "0.8232354508791921603541165");
  CHECK(HPReal::parse("-2.5e-3", 64) == HPReal::from_ratio(-1, 400, 64));
  CHECK_THROWS_AS(HPReal::parse("abc", 64), DomainError);
  CHECK_THROWS_AS(HPReal::parse("1.2.3", 64), DomainError);
  CHECK_THROWS_AS(HPReal::parse("", 64), DomainError);
}

TEST_CASE("property: (a*b)/b recovers a at 256 bits") {
  std::mt19937_64 rng(11);
  const HPReal tol_scale = ldexp(HPReal(1, 256), -240);
  for (int i = 0; i < 2000; ++i) {
    const HPReal a = random_positive(rng, 256, -20, 20);
    const HPReal b = random_positive(rng, 256, -20, 20);
    CHECK(abs((a * b) / b - a) < tol_scale * a);
  }
}

TEST_CASE("property: sqrt(a)^2 recovers a within 4 ulp") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10'000; ++i) {
    const HPReal a = random_positive(rng, 160, -10, 10);
    const HPReal r = sqrt(a);
    REQUIRE(abs(r * r - a) <= 4 * ulp(a));
  }
}

TEST_CASE("property: to_decimal/parse round trip is exact") {
  std::mt19937_64 rng(13);
  for (long bits : {53L, 64L, 100L, 143L, 256L, 1000L}) {
    const int digits = round_trip_digits(bits);
    for (int i = 0; i < 300; ++i) {
      HPReal x = random_positive(rng, bits, -40, 40);
      x = sqrt(x);  // full-width mantissa
      if (i % 2) x = -x;
      const HPReal back = HPReal::parse(to_decimal(x, digits), bits);
      REQUIRE(identical(back, x));
    }
  }
}

TEST_CASE("PrecisionPolicy budget") {
  PrecisionPolicy p;
  CHECK(p.target_digits == 40);
  CHECK(p.working_bits() == 133 + 10);
  CHECK(PrecisionPolicy::min_guard_bits(0) == 10);
  CHECK(PrecisionPolicy::min_guard_bits(1) == 11);
  CHECK(PrecisionPolicy::min_guard_bits(10'000'000) == 10 + 24);
  const auto q = PrecisionPolicy::for_iterations(25, 1000);
  CHECK(q.guard_bits == 20);
  CHECK(q.working_bits() == 84 + 20);
  CHECK_NOTHROW(q.validate(1000));
  CHECK_THROWS_AS(q.validate(10'000'000), DomainError);
  CHECK_THROWS_AS((PrecisionPolicy{0, 30}.validate(10)), DomainError);
}

TEST_CASE("ulp and exponent") {
  const HPReal one(1, 64);
  CHECK(ulp(one) == ldexp(HPReal(1, 64), -63));
  CHECK(HPReal(8, 64).exponent() == 4);
}
