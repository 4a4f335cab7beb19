#include "radical/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "radical/extract.hpp"
#include "radical/golden.hpp"
#include "radical/maps.hpp"
#include "radical/reference_data.hpp"
#include "radical/series.hpp"

namespace radical::verify {

namespace {

struct Outcome {
  bool ok = false;
  std::string measured;
  std::string expected;
  std::string detail;
};

HPReal power_of_ten(int e, long bits) { return HPReal::parse("1e" + std::to_string(e), bits); }

std::string sci(const HPReal& x) { return to_decimal(x, 3); }

Outcome paris_constant() {
  const auto policy = PrecisionPolicy::for_iterations(30, 60);
  const long bits = policy.working_bits();
  const HPReal value = golden::paris_product(60, policy);
  const HPReal delta = abs(value - HPReal::parse(reference::kParisConstant, bits));
  return {delta < power_of_ten(-24, bits), to_decimal(value, 30),
          std::string(reference::kParisConstant) + " +- 1e-24", "|delta| = " + sci(delta)};
}

Outcome finite_identity() {
  const auto policy = PrecisionPolicy::for_iterations(40, 64);
  const long bits = policy.working_bits();
  const HPReal tol = ldexp(HPReal(1, bits), -(bits - 20));
  HPReal worst(bits);
  for (std::uint64_t n = 2; n <= 64; ++n) {
    worst = max(worst, abs(golden::paris_product(n, policy) - golden::paris_scaled(n, policy)));
  }
  return {worst < tol, "max gap " + sci(worst), "< 2^-" + std::to_string(bits - 20),
          "n = 2..64"};
}

Outcome bound_suite() {
  const auto rows = golden::verify_bound(200, PrecisionPolicy::for_iterations(40, 200));
  const auto good = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.ok; });
  const bool ok = rows.size() == 200 && good == 200;
  return {ok, std::to_string(good) + "/200 rows hold",
          "equality at k = 1, 0 < phi - x_k < phi^-k for k = 2..200", ""};
}

Outcome cos_closed_form() {
  const auto policy = PrecisionPolicy::for_iterations(40, 40);
  const long bits = policy.working_bits();
  const auto rows = golden::cos_map_check(40, policy);
  HPReal worst(bits);
  for (const auto& r : rows) worst = max(worst, r.identity_error);
  const HPReal p = pi(bits);
  const HPReal limit = p * p / 2;
  double lo = 1e9;
  double hi = 0;
  for (size_t i = 4; i + 1 < rows.size(); ++i) {  // k = 5 .. 39
    const HPReal ratio = abs(rows[i].scaled_value - limit) / abs(rows[i + 1].scaled_value - limit);
    lo = std::min(lo, ratio.to_double());
    hi = std::max(hi, ratio.to_double());
  }
  const bool ok = worst < power_of_ten(-30, bits) && lo >= 3.5 && hi <= 4.5;
  return {ok,
          "max |x_k - cos(pi/2^k)| = " + sci(worst) + ", ratios in [" + std::to_string(lo) +
              ", " + std::to_string(hi) + "]",
          "< 1e-30, ratios 4 +- 0.5 for k >= 5", ""};
}

Outcome symbolic_tables() {
  int matched = 0;
  int total = 0;
  std::string misses;
  auto check_table = [&](MapId map) {
    const CoeffTable table = solve_coefficients(AnsatzSpec::standard(map));
    const auto published = reference::published_table(map);
    for (const auto& [name, poly] : published) {
      ++total;
      if (table.at(name) == poly) {
        ++matched;
      } else {
        misses += std::string(to_string(map)) + ":" + name + " ";
      }
    }
    if (table.entries.size() != published.size()) misses += "size mismatch ";
    return table;
  };
  check_table(MapId::quad_shift);
  const CoeffTable root = check_table(MapId::root_shift);
  check_table(MapId::product_radical);
  const AnsatzSpec product = AnsatzSpec::standard(MapId::product_radical);
  for (const auto& [m, poly] : reference::product_radical_leading_terms()) {
    ++total;
    const auto it = std::find_if(product.fixed.begin(), product.fixed.end(),
                                 [&](const FixedTerm& f) { return f.m == m; });
    if (it != product.fixed.end() && it->coeff == poly) {
      ++matched;
    } else {
      misses += "product-radical:" + to_string(m) + " ";
    }
  }
  const CoeffTable add = solve_coefficients(AnsatzSpec::standard(MapId::add_inverse));
  const auto signs = coefficient_sign_pattern(add, root);
  int signed_matches = 0;
  std::string pattern;
  for (const auto& [name, s] : signs) {
    if (s != 0) ++signed_matches;
    pattern += name + (s > 0 ? "+" : s < 0 ? "-" : "?") + " ";
  }
  const bool ok = misses.empty() && matched == total && signs.size() == 7 && signed_matches == 7;
  return {ok,
          std::to_string(matched) + "/" + std::to_string(total) +
              " exact; add-inverse vs root-shift signs " + pattern,
          "14 + 7 + 17 exact; 7 sign-related", misses};
}

Outcome shift_fixtures() {
  int matched = 0;
  int total = 0;
  std::string misses;
  for (const auto* list : {&reference::integer_lattice_shifts(), &reference::half_lattice_shifts()}) {
    for (const auto& disp : *list) {
      ++total;
      const LogPowSeries got =
          shift_expand(LogPowSeries::monomial(disp.input, CPoly(QSqrt2(1)), disp.D), disp.D);
      if (got == reference::expected_series(disp)) {
        ++matched;
      } else {
        misses += std::string(disp.label) + " ";
      }
    }
  }
  return {matched == total, std::to_string(matched) + "/" + std::to_string(total) + " displays",
          "15 + 10 displays coefficient-for-coefficient", misses};
}

Outcome published_estimate(MapId map, int tol_exponent) {
  constexpr std::uint64_t n = 10'000'000;
  const auto policy = PrecisionPolicy::for_iterations(40, n);
  const long bits = policy.working_bits();
  const auto est = extract::estimate_c(MapSpec::standard(map), n,
                                       AnsatzSpec::default_truncation(map), policy);
  const char* reference = reference::published_constant(map);
  const HPReal delta = abs(est.value - HPReal::parse(reference, bits));
  bool ok = delta < power_of_ten(tol_exponent, bits);
  std::string detail = "|delta| = " + sci(delta) + ", modeled " + sci(est.modeled_error);
  if (map == MapId::root_shift) {
    const auto derived = extract::derived_checks(est).front();
    const HPReal gap = abs(derived.value - HPReal::parse(reference::kRootShiftOverSqrt2, bits));
    ok = ok && gap < power_of_ten(-9, bits);
    detail += ", C/sqrt2 = " + to_decimal(derived.value, 12);
  }
  if (map == MapId::product_radical) {
    ok = ok && est.value.sign() < 0;
  }
  return {ok, to_decimal(est.value, 30),
          std::string(reference) + " +- 1e" + std::to_string(tol_exponent), detail};
}

Outcome error_model() {
  const std::vector<std::uint64_t> depths = {10'000, 100'000, 1'000'000};
  const auto policy = PrecisionPolicy::for_iterations(40, depths.back());
  bool ok = true;
  std::string measured;
  for (MapId map : kDivergentMaps) {
    const auto est = extract::convergence_study(MapSpec::standard(map), depths,
                                                AnsatzSpec::default_truncation(map), policy);
    const HPReal& gap_hi = est[2].consistency_error;  // |e(1e6) - e(1e5)|
    const HPReal& gap_lo = est[1].consistency_error;  // |e(1e5) - e(1e4)|
    const bool map_ok = gap_hi < 10 * est[1].modeled_error && gap_hi < gap_lo;
    ok = ok && map_ok;
    measured += std::string(to_string(map)) + ": gap " + sci(gap_hi) + " vs model(1e5) " +
                sci(est[1].modeled_error) + (map_ok ? "; " : " FAIL; ");
  }
  return {ok, measured, "|e(1e6) - e(1e5)| < 10 model(1e5), shrinking gaps", ""};
}

Outcome reciprocal_link() {
  constexpr long bits = 128;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> pick(1000, 100000);
  const HPReal tol = ldexp(HPReal(1, bits), -100);
  HPReal worst(bits);
  for (int i = 0; i < 100; ++i) {
    const HPReal x = HPReal::from_ratio(pick(rng), 10000, bits);
    const auto [r1, r2] = reciprocal_link_check(x);
    worst = max(worst, max(r1, r2));
  }
  return {worst < tol, "max residual " + sci(worst), "< 2^-100", "100 points in [0.1, 10]"};
}

Outcome checkpoint_identity() {
  constexpr std::uint64_t n = 100'000;
  const auto policy = PrecisionPolicy::for_iterations(40, n);
  const MapSpec map = MapSpec::standard(MapId::quad_shift);
  std::optional<Checkpoint> mid;
  IterateOptions cold;
  cold.checkpoint_every = n / 2;
  cold.on_checkpoint = [&](const Checkpoint& c) {
    if (c.k == n / 2) mid = c;
  };
  const HPReal full = iterate(map, n, policy, cold);
  if (!mid) return {false, "no checkpoint at k = 50000", "bit-identical", ""};
  IterateOptions warm;
  warm.resume = Checkpoint::from_text(mid->to_text());
  const HPReal resumed = iterate(map, n, policy, warm);
  const bool ok = identical(full, resumed);
  return {ok, ok ? "bit-identical" : "differs: " + to_decimal(full - resumed, 3),
          "bit-identical", "resume at k = 50000"};
}

struct Fixture {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> kFixtures = {
      {"paris constant, product route", 1.0, paris_constant},
      {"finite product identity", 1.0, finite_identity},
      {"golden-mean bound", 1.0, bound_suite},
      {"half-angle closed form", 1.0, cos_closed_form},
      {"symbolic coefficient tables", 30.0, symbolic_tables},
      {"shift-expansion displays", 5.0, shift_fixtures},
      {"quad-shift constant", 300.0, [] { return published_estimate(MapId::quad_shift, -18); }},
      {"root-shift constant", 300.0, [] { return published_estimate(MapId::root_shift, -12); }},
      {"product-radical constant", 300.0,
       [] { return published_estimate(MapId::product_radical, -18); }},
      {"error model", 120.0, error_model},
      {"reciprocal link", 1.0, reciprocal_link},
      {"checkpoint determinism", 10.0, checkpoint_identity},
  };
  return kFixtures;
}

}  // namespace

std::string fixture_name(int id) { return fixtures().at(static_cast<size_t>(id - 1)).name; }

report::FixtureRecord run_fixture(int id) {
  const Fixture& f = fixtures().at(static_cast<size_t>(id - 1));
  report::FixtureRecord rec;
  rec.id = id;
  rec.name = f.name;
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = f.run();
  } catch (const std::exception& e) {
    out = {false, "exception", "", e.what()};
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = rec.seconds < f.budget_seconds;
  rec.passed = out.ok && in_budget;
  rec.measured = out.measured;
  rec.expected = out.expected;
  rec.detail = out.detail;
  if (!in_budget) {
    if (!rec.detail.empty()) rec.detail += "; ";
    rec.detail += "over runtime budget of " + std::to_string(f.budget_seconds) + " s";
  }
  return rec;
}

unsigned workers_from_env() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<report::FixtureRecord> run_suite(unsigned workers) {
  std::vector<report::FixtureRecord> results(kFixtureCount);
  // Slowest fixtures first so they overlap the cheap ones.
  const std::vector<int> order = {7, 8, 9, 10, 5, 12, 6, 1, 2, 3, 4, 11};
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < order.size(); i = next++) {
      results[static_cast<size_t>(order[i] - 1)] = run_fixture(order[i]);
    }
  };
  const unsigned n = std::clamp(workers, 1u, static_cast<unsigned>(kFixtureCount));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace radical::verify
