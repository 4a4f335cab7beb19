#include "radical/extract.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace radical::extract {

SeriesModel SeriesModel::build(MapId map, int truncation) {
  AnsatzSpec ansatz = AnsatzSpec::with_truncation(map, truncation);
  CoeffTable table = solve_coefficients(ansatz);
  // Slot levels are two half-steps apart on both lattices.
  const int next_d = ansatz.slots.back().m.d + 2;
  AnsatzSpec next = AnsatzSpec::with_truncation(map, next_d);
  CoeffTable next_table = solve_coefficients(next);
  return {std::move(ansatz), std::move(table), std::move(next), std::move(next_table), next_d};
}

namespace {

HPReal horner(const std::vector<HPReal>& poly, const HPReal& c) {
  HPReal acc(c.prec_bits());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc *= c;
    acc += *it;
  }
  return acc;
}

std::vector<HPReal> derivative(const std::vector<HPReal>& poly) {
  std::vector<HPReal> d;
  for (size_t n = 1; n < poly.size(); ++n) d.push_back(poly[n] * static_cast<long>(n));
  if (d.empty()) d.emplace_back(poly.front().prec_bits());
  return d;
}

void require_depth(std::uint64_t n) {
  if (n < kMinDepth) {
    throw DomainError("estimate depth " + std::to_string(n) + " below minimum " +
                      std::to_string(kMinDepth));
  }
}

}  // namespace

HPReal solve_for_c(const SeriesModel& model, std::uint64_t n, const HPReal& x_n) {
  const long bits = x_n.prec_bits();
  std::vector<HPReal> poly = series_in_c(model.ansatz, model.table, n, bits);
  if (poly.size() < 2 || poly[1].is_zero()) {
    throw ExtractError("series does not depend on C at this depth");
  }
  poly[0] -= x_n;
  const std::vector<HPReal> dpoly = derivative(poly);
  HPReal c = -poly[0] / poly[1];
  const HPReal tol = ldexp(HPReal(1, bits), -(bits - 20));
  for (int step = 0; step < 64; ++step) {
    const HPReal slope = horner(dpoly, c);
    if (slope.is_zero()) throw ExtractError("Newton: zero derivative");
    const HPReal delta = horner(poly, c) / slope;
    c -= delta;
    if (abs(delta) < tol) return c;
  }
  throw ExtractError("Newton did not converge in 64 steps");
}

HPReal modeled_error(const SeriesModel& model, std::uint64_t n, const HPReal& c) {
  const HPReal block = evaluate_block(model.next_ansatz, model.next_table, c, n, model.next_d);
  const auto poly = series_in_c(model.ansatz, model.table, n, c.prec_bits());
  const HPReal sensitivity = abs(horner(derivative(poly), c));
  HPReal err = abs(block) / sensitivity;
  if (err.is_zero()) err = ulp(c);
  return err;
}

namespace {

ConstantEstimate make_estimate(const MapSpec& map, const SeriesModel& model, std::uint64_t n,
                               const HPReal& x_n, const HPReal& x_tenth) {
  HPReal c = solve_for_c(model, n, x_n);
  HPReal err = modeled_error(model, n, c);
  HPReal coarse = solve_for_c(model, std::max<std::uint64_t>(n / 10, 2), x_tenth);
  HPReal gap = abs(c - coarse);
  return {map.id, std::move(c), n, model.ansatz.truncation, std::move(err), std::move(gap)};
}

}  // namespace

ConstantEstimate estimate_c(const MapSpec& map, std::uint64_t n, int truncation,
                            const PrecisionPolicy& policy) {
  return estimate_c(map, n, SeriesModel::build(map.id, truncation), policy);
}

ConstantEstimate estimate_c(const MapSpec& map, std::uint64_t n, const SeriesModel& model,
                            const PrecisionPolicy& policy, const IterateOptions& options) {
  require_depth(n);
  if (model.ansatz.map != map.id) throw DomainError("series model is for another map");
  const std::uint64_t tenth = n / 10;
  std::optional<HPReal> x_tenth;
  IterateOptions opt = options;
  opt.observer = [&](std::uint64_t k, const HPReal& x) {
    if (k == tenth) x_tenth = x;
    if (options.observer) options.observer(k, x);
  };
  const HPReal x_n = iterate(map, n, policy, opt);
  if (!x_tenth) {
    // Resumed past N/10: recompute the coarse iterate from scratch.
    x_tenth = iterate(map, tenth, policy);
  }
  return make_estimate(map, model, n, x_n, *x_tenth);
}

std::vector<NamedValue> derived_checks(const ConstantEstimate& e) {
  switch (e.map) {
    case MapId::quad_shift:
      return {{"2C", e.value * 2, "1.6464707"}};
    case MapId::root_shift:
      return {{"C/sqrt2", e.value / sqrt(HPReal(2, e.value.prec_bits())), "0.291131527"}};
    default:
      throw UnsupportedMapError("no published derived form for map " +
                                std::string(to_string(e.map)));
  }
}

std::vector<ConstantEstimate> convergence_study(const MapSpec& map,
                                                const std::vector<std::uint64_t>& depths,
                                                int truncation, const PrecisionPolicy& policy) {
  if (depths.size() < 2) throw DomainError("convergence_study needs at least two depths");
  if (!std::is_sorted(depths.begin(), depths.end())) {
    throw DomainError("convergence_study depths must be ascending");
  }
  for (auto n : depths) require_depth(n);
  const SeriesModel model = SeriesModel::build(map.id, truncation);

  std::set<std::uint64_t> wanted;
  for (auto n : depths) {
    wanted.insert(n);
    wanted.insert(n / 10);
  }
  std::map<std::uint64_t, HPReal> seen;
  IterateOptions opt;
  opt.observer = [&](std::uint64_t k, const HPReal& x) {
    if (wanted.count(k)) seen.emplace(k, x);
  };
  (void)iterate(map, depths.back(), policy, opt);

  std::vector<ConstantEstimate> out;
  for (auto n : depths) {
    out.push_back(make_estimate(map, model, n, seen.at(n), seen.at(n / 10)));
  }
  return out;
}

}  // namespace radical::extract
