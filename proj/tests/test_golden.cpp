#include <doctest.h>

#include "oracles.hpp"
#include "radical/golden.hpp"
#include "radical/maps.hpp"
#include "radical/reference_data.hpp"

using namespace radical;

namespace {

const PrecisionPolicy kPolicy{40, 30};

HPReal tol(long exp10) {
  return HPReal::parse("1e-" + std::to_string(exp10), 256);
}

}  // namespace

TEST_CASE("phi") {
  const HPReal p = golden::phi(200);
  CHECK(abs(p * p - p - 1) < ldexp(HPReal(1, 200), -195));
  // sqrt5 from the digit-pair oracle
  const HPReal root5 = HPReal::parse(oracle::sqrt_digits(5, 55), 200);
  CHECK(abs(p - (1 + root5) / 2) < tol(54));
}

TEST_CASE("first iterates of the simple radical map") {
  // x_2 = sqrt2, x_3 = sqrt(1 + sqrt2)
  const MapSpec m = MapSpec::standard(MapId::simple_radical);
  CHECK(abs(iterate_at(m, 2, 200) - HPReal::parse(oracle::sqrt_digits(2, 55), 200)) < tol(54));
}

TEST_CASE("finite product identity") {
  // phi - x_k = (phi - x_{k-1}) / (phi + x_k) telescopes to
  //   prod_{k=2}^{n} 2 phi/(phi + x_k) = (2 phi)^(n-1) (phi - x_n) / (phi - 1)
  for (std::uint64_t n : {2ULL, 5ULL, 20ULL, 60ULL}) {
    CAPTURE(n);
    const HPReal prod = golden::paris_product(n, kPolicy);
    const long bits = prod.prec_bits() + 300;
    const HPReal p = golden::phi(bits);
    const HPReal x = iterate_at(MapSpec::standard(MapId::simple_radical), n, bits);
    const HPReal rhs = pow(2 * p, static_cast<long>(n - 1)) * (p - x) / (p - 1);
    CHECK(abs(prod - rhs) < tol(38));
  }
}

TEST_CASE("paris product values") {
  CHECK(abs(golden::paris_product(2, kPolicy) - HPReal::parse("1.06722", 256)) < tol(5));
  const HPReal c60 = golden::paris_product(60, kPolicy);
  CHECK(abs(c60 - HPReal::parse(reference::kParisConstant, 256)) < tol(25));
  CHECK(to_decimal(2 * c60, 26, DecimalRounding::truncate) == "2.1972839287883129714693378");
  CHECK(abs(golden::paris_scaled(50, kPolicy) - c60) < tol(25));
  CHECK_THROWS(golden::paris_product(1, kPolicy));
}

TEST_CASE("partial products increase to the constant") {
  HPReal prev = golden::paris_product(2, kPolicy);
  for (std::uint64_t n = 3; n <= 30; ++n) {
    const HPReal cur = golden::paris_product(n, kPolicy);
    CHECK(cur > prev);
    CHECK(cur < HPReal::parse(reference::kParisConstant, 256) + tol(30));
    prev = cur;
  }
}

TEST_CASE("geometric gap bound") {
  const auto rows = golden::verify_bound(100, kPolicy);
  REQUIRE(rows.size() == 100);
  CHECK(rows[0].k == 1);
  CHECK(rows[0].gap == rows[0].bound);
  CHECK(rows[0].ok);
  CHECK(abs(rows[1].gap - HPReal::parse("0.2039", 256)) < tol(4));
  CHECK(abs(rows[1].bound - HPReal::parse("0.381966", 256)) < tol(5));
  for (const auto& r : rows) {
    CAPTURE(r.k);
    CHECK(r.ok);
    CHECK(r.gap > 0);
    if (r.k >= 2) CHECK(r.gap < r.bound);
  }
  // y_k ~ C 2 (2 phi)^-k is much smaller than phi^-k deep in the table
  CHECK(rows[99].gap < rows[99].bound * HPReal::parse("1e-20", 256));
}

TEST_CASE("golden report") {
  const auto r = golden::golden_report(60, kPolicy);
  CHECK(r.n == 60);
  CHECK(abs(r.product_value - r.scaled_value) < tol(25));
  CHECK(r.bound_ok.size() == 60);
  for (bool ok : r.bound_ok) CHECK(ok);
}

TEST_CASE("half-angle cosine closed form") {
  const auto rows = golden::cos_map_check(30, kPolicy);
  REQUIRE(rows.size() == 30);
  for (const auto& r : rows) CHECK(r.identity_error < tol(35));
  const HPReal pi2_half = pow(pi(256), 2) / 2;
  CHECK(abs(rows.back().scaled_value - pi2_half) < tol(15));
  CHECK(to_decimal(rows.back().scaled_value, 8) == "4.9348022");
}

TEST_CASE("double radical exploration") {
  const auto rows = golden::double_radical_table(20, kPolicy);
  REQUIRE(rows.size() == 20);
  const HPReal root3 = HPReal::parse(oracle::sqrt_digits(3, 50), 256);
  CHECK(abs(rows[0].limit_gap - root3) < tol(38));
  CHECK_FALSE(rows[0].ratio.has_value());
  REQUIRE(rows[19].ratio.has_value());
  const HPReal limit_ratio = 1 / (1 + root3);
  CHECK(abs(*rows[19].ratio - limit_ratio) < tol(6));
  CHECK(to_decimal(limit_ratio, 7) == "0.3660254");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].limit_gap < rows[i - 1].limit_gap);

  const auto single = golden::double_radical_explore(20, kPolicy);
  CHECK(single.n == 20);
  CHECK(identical(single.limit_gap, rows[19].limit_gap));
}
