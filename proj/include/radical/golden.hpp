#pragma once

// The golden-mean recurrence x_1 = 1, x_k = sqrt(1 + x_{k-1}) and its
// neighbours: the product/scaled-gap routes to the constant
//   C = lim (2 phi)^n (phi - x_n) / 2 = prod_{k>=2} 2 phi / (phi + x_k),
// the geometric gap bound, the half-angle cosine closed form and numeric
// exploration of x -> sqrt(2 + 2x).

#include <cstdint>
#include <optional>
#include <vector>

#include "radical/hpnum.hpp"

namespace radical::golden {

/// (1 + sqrt5) / 2 at the given precision.
HPReal phi(long prec_bits);

/// prod_{k=2}^{n} 2 phi / (phi + x_k). Requires n >= 2.
HPReal paris_product(std::uint64_t n, const PrecisionPolicy& policy);

/// (2 phi)^n (phi - x_n) / 2, evaluated with enough extra bits to absorb the
/// cancellation in phi - x_n and returned at policy.working_bits().
HPReal paris_scaled(std::uint64_t n, const PrecisionPolicy& policy);

struct GoldenReport {
  std::uint64_t n = 0;
  HPReal product_value;
  HPReal scaled_value;
  std::vector<bool> bound_ok;  // index k - 1
};

GoldenReport golden_report(std::uint64_t n, const PrecisionPolicy& policy);

struct BoundRow {
  std::uint64_t k;
  HPReal gap;    // y_k = phi - x_k
  HPReal bound;  // phi^-k
  /// y_k == bound at k = 1, 0 < y_k < bound for k >= 2.
  bool ok;
};

/// Rows for k = 1..k_max. Works internally at enough precision to resolve
/// y_k ~ (2 phi)^-k.
std::vector<BoundRow> verify_bound(std::uint64_t k_max, const PrecisionPolicy& policy);

struct CosRow {
  std::uint64_t k;
  HPReal identity_error;  // |x_k - cos(pi / 2^k)|
  HPReal scaled_value;    // 4^k (1 - x_k)
};

/// Half-angle map rows for k = 1..k_max.
std::vector<CosRow> cos_map_check(std::uint64_t k_max, const PrecisionPolicy& policy);

struct DoubleRadicalRow {
  std::uint64_t n;
  HPReal limit_gap;              // L - x_n, L = 1 + sqrt3
  std::optional<HPReal> ratio;   // (L - x_n) / (L - x_{n-1}), from n = 2
  HPReal scaled;                 // L^n (L - x_n)
};

/// Rows for n = 1..n_max of x_1 = 1, x_k = sqrt(2 + 2 x_{k-1}).
std::vector<DoubleRadicalRow> double_radical_table(std::uint64_t n_max,
                                                   const PrecisionPolicy& policy);
DoubleRadicalRow double_radical_explore(std::uint64_t n, const PrecisionPolicy& policy);

}  // namespace radical::golden
