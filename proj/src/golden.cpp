#include "radical/golden.hpp"

#include <cmath>

#include "radical/maps.hpp"

namespace radical::golden {

namespace {

// Bits lost when a quantity of size ~base^-n is formed by cancellation and
// then scaled back up by base^n.
long cancellation_bits(std::uint64_t n, double log2_base) {
  return static_cast<long>(std::ceil(static_cast<double>(n) * log2_base)) + 16;
}

constexpr double kLog2TwoPhi = 1.6942419136306174;  // log2(1 + sqrt5)

}  // namespace

HPReal phi(long prec_bits) {
  return (1 + sqrt(HPReal(5, prec_bits))) / 2;
}

HPReal paris_product(std::uint64_t n, const PrecisionPolicy& policy) {
  if (n < 2) throw DomainError("paris_product requires n >= 2");
  policy.validate(n);
  const long bits = policy.working_bits();
  const HPReal p = phi(bits);
  const HPReal two_phi = 2 * p;
  HPReal product(1, bits);
  IterateOptions opt;
  opt.observer = [&](std::uint64_t k, const HPReal& x) {
    if (k >= 2) product *= two_phi / (p + x);
  };
  (void)iterate_at(MapSpec::standard(MapId::simple_radical), n, bits, opt);
  return product;
}

HPReal paris_scaled(std::uint64_t n, const PrecisionPolicy& policy) {
  if (n < 2) throw DomainError("paris_scaled requires n >= 2");
  policy.validate(n);
  const long bits = policy.working_bits();
  const long wide = bits + cancellation_bits(n, kLog2TwoPhi);
  const HPReal p = phi(wide);
  const HPReal x = iterate_at(MapSpec::standard(MapId::simple_radical), n, wide);
  const HPReal scaled = pow(2 * p, static_cast<long>(n)) * (p - x) / 2;
  return scaled.with_precision(bits);
}

GoldenReport golden_report(std::uint64_t n, const PrecisionPolicy& policy) {
  std::vector<bool> ok;
  for (const auto& row : verify_bound(n, policy)) ok.push_back(row.ok);
  return GoldenReport{n, paris_product(n, policy), paris_scaled(n, policy), std::move(ok)};
}

std::vector<BoundRow> verify_bound(std::uint64_t k_max, const PrecisionPolicy& policy) {
  if (k_max < 1) throw DomainError("verify_bound requires k_max >= 1");
  const long bits = policy.working_bits();
  // y_k is about 2C (2 phi)^-k, so resolving it needs that many extra bits.
  const long wide = bits + cancellation_bits(k_max, kLog2TwoPhi);
  const HPReal p = phi(wide);
  const HPReal inv_p = 1 / p;
  std::vector<BoundRow> rows;
  HPReal bound = inv_p;
  IterateOptions opt;
  opt.observer = [&](std::uint64_t k, const HPReal& x) {
    HPReal y = p - x;
    bool ok = false;
    if (k == 1) {
      // y_1 = phi - 1 = 1/phi; equal up to the rounding of 1/phi.
      ok = abs(y - bound) <= 4 * ulp(bound);
    } else {
      ok = y.sign() > 0 && y < bound;
    }
    rows.push_back({k, y.with_precision(bits), bound.with_precision(bits), ok});
    bound *= inv_p;
  };
  (void)iterate_at(MapSpec::standard(MapId::simple_radical), k_max, wide, opt);
  return rows;
}

std::vector<CosRow> cos_map_check(std::uint64_t k_max, const PrecisionPolicy& policy) {
  if (k_max < 1) throw DomainError("cos_map_check requires k_max >= 1");
  const long bits = policy.working_bits();
  // 1 - x_k ~ 4^-k.
  const long wide = bits + cancellation_bits(k_max, 2.0);
  const HPReal pi_w = pi(wide);
  std::vector<CosRow> rows;
  IterateOptions opt;
  opt.observer = [&](std::uint64_t k, const HPReal& x) {
    const HPReal angle = ldexp(pi_w, -static_cast<long>(k));
    const HPReal err = abs(x - cos(angle));
    const HPReal scaled = ldexp(1 - x, 2 * static_cast<long>(k));
    rows.push_back({k, err.with_precision(bits), scaled.with_precision(bits)});
  };
  (void)iterate_at(MapSpec::standard(MapId::half_angle), k_max, wide, opt);
  return rows;
}

std::vector<DoubleRadicalRow> double_radical_table(std::uint64_t n_max,
                                                   const PrecisionPolicy& policy) {
  if (n_max < 1) throw DomainError("double_radical_explore requires n >= 1");
  const long bits = policy.working_bits();
  const long wide = bits + cancellation_bits(n_max, 1.4499843134764958);  // log2(1+sqrt3)
  const HPReal limit = 1 + sqrt(HPReal(3, wide));
  std::vector<DoubleRadicalRow> rows;
  std::optional<HPReal> prev_gap;
  HPReal limit_pow = limit;
  IterateOptions opt;
  opt.observer = [&](std::uint64_t n, const HPReal& x) {
    const HPReal gap = limit - x;
    std::optional<HPReal> ratio;
    if (prev_gap) ratio = (gap / *prev_gap).with_precision(bits);
    rows.push_back({n, gap.with_precision(bits), std::move(ratio),
                    (limit_pow * gap).with_precision(bits)});
    prev_gap = gap;
    limit_pow *= limit;
  };
  (void)iterate_at(MapSpec::standard(MapId::double_radical), n_max, wide, opt);
  return rows;
}

DoubleRadicalRow double_radical_explore(std::uint64_t n, const PrecisionPolicy& policy) {
  return double_radical_table(n, policy).back();
}

}  // namespace radical::golden
