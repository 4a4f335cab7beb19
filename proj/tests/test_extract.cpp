#include <doctest.h>

#include "radical/extract.hpp"
#include "radical/reference_data.hpp"

using namespace radical;
using namespace radical::extract;

namespace {

const PrecisionPolicy kPolicy{40, 40};

HPReal published(MapId id) { return HPReal::parse(reference::published_constant(id), 256); }

HPReal dec(const char* s) { return HPReal::parse(s, 256); }

}  // namespace

TEST_CASE("series model carries the next block") {
  const SeriesModel m = SeriesModel::build(MapId::quad_shift, 8);
  CHECK(m.ansatz.truncation == 8);
  CHECK(m.next_d == 10);
  CHECK(m.next_table.truncation == 10);
  const SeriesModel r = SeriesModel::build(MapId::root_shift, 5);
  CHECK(r.next_d == 7);
}

TEST_CASE("estimates at 10^5 agree with the printed constants") {
  for (MapId id : kDivergentMaps) {
    const std::string name(to_string(id));
    CAPTURE(name);
    const MapSpec map = MapSpec::standard(id);
    const auto e = estimate_c(map, 100'000, AnsatzSpec::default_truncation(id), kPolicy);
    CHECK(e.map == id);
    CHECK(e.n_used == 100'000);
    CHECK(e.modeled_error > 0);
    if (id == MapId::add_inverse) continue;
    // The estimate must be at least as good as the model claims, within a factor.
    const HPReal delta = abs(e.value - published(id));
    CHECK(delta < 10 * e.modeled_error + dec("1e-25"));
  }
}

TEST_CASE("add-inverse differs from root-shift") {
  const auto add = estimate_c(MapSpec::standard(MapId::add_inverse), 100'000, 5, kPolicy);
  CHECK(abs(add.value - published(MapId::root_shift)) > dec("1e-3"));
}

TEST_CASE("derived constants") {
  const auto quad = estimate_c(MapSpec::standard(MapId::quad_shift), 1'000'000, 8, kPolicy);
  const auto dq = derived_checks(quad);
  REQUIRE(dq.size() == 1);
  CHECK(dq[0].name == "2C");
  CHECK(abs(dq[0].value - dec("1.646470901758384320708233")) < dec("1e-20"));
  CHECK(std::string(dq[0].reference) == reference::kQuadShiftDoubled);
  // the quoted value is good to about six decimals only
  CHECK(abs(dq[0].value - dec(reference::kQuadShiftDoubled)) < dec("1e-6"));

  const auto root = estimate_c(MapSpec::standard(MapId::root_shift), 1'000'000, 5, kPolicy);
  const auto dr = derived_checks(root);
  REQUIRE(dr.size() == 1);
  CHECK(to_decimal(dr[0].value, 9, DecimalRounding::truncate) == "0.291131527");

  const auto prod = estimate_c(MapSpec::standard(MapId::product_radical), 1'000, 8, kPolicy);
  CHECK_THROWS_AS(derived_checks(prod), UnsupportedMapError);
}

TEST_CASE("quad-shift convergence") {
  const auto study = convergence_study(MapSpec::standard(MapId::quad_shift),
                                       {1'000, 10'000, 100'000}, 8, kPolicy);
  REQUIRE(study.size() == 3);
  const HPReal c = published(MapId::quad_shift);
  const HPReal e3 = abs(study[0].value - c);
  const HPReal e4 = abs(study[1].value - c);
  const HPReal e5 = abs(study[2].value - c);
  // leading omitted term ~ ln(k)^5 / k^5: about four decades per decade of N
  CHECK(e4 * 1000 < e3);
  CHECK(e5 * 1000 < e4);
  for (const auto& e : study) CHECK(e.truncation == 8);
  CHECK(abs(study[2].consistency_error - abs(study[2].value - study[1].value)) < dec("1e-35"));
}

TEST_CASE("modeled error tracks the observed error") {
  for (MapId id : {MapId::quad_shift, MapId::root_shift, MapId::product_radical}) {
    const std::string name(to_string(id));
    CAPTURE(name);
    const auto e = estimate_c(MapSpec::standard(id), 10'000, AnsatzSpec::default_truncation(id),
                              kPolicy);
    const HPReal observed = abs(e.value - published(id));
    CHECK(observed < 10 * e.modeled_error);
    CHECK(observed > e.modeled_error / 10);
  }
}

TEST_CASE("estimation is deterministic") {
  const MapSpec map = MapSpec::standard(MapId::root_shift);
  const auto a = estimate_c(map, 20'000, 5, kPolicy);
  const auto b = estimate_c(map, 20'000, 5, kPolicy);
  CHECK(identical(a.value, b.value));
  CHECK(identical(a.modeled_error, b.modeled_error));
  const auto study = convergence_study(map, {20'000, 20'000}, 5, kPolicy);
  CHECK(identical(study[0].value, study[1].value));
  // consistency is measured against N/10 for every entry
  CHECK(identical(study[0].consistency_error, study[1].consistency_error));
}

TEST_CASE("a different seed changes C but not the coefficients") {
  const MapSpec standard = MapSpec::standard(MapId::quad_shift);
  const MapSpec other = standard.with_seed(Rat(2));
  const auto a = estimate_c(standard, 10'000, 8, kPolicy);
  const auto b = estimate_c(other, 10'000, 8, kPolicy);
  CHECK(abs(a.value - b.value) > dec("0.1"));
  const SeriesModel m = SeriesModel::build(MapId::quad_shift, 8);
  CHECK(solve_coefficients(m.ansatz).entries.size() == 14);
}

TEST_CASE("the solved constant satisfies the series equation") {
  const SeriesModel m = SeriesModel::build(MapId::quad_shift, 8);
  const long bits = kPolicy.working_bits();
  const HPReal x = iterate(MapSpec::standard(MapId::quad_shift), 5'000, kPolicy);
  const HPReal c = solve_for_c(m, 5'000, x);
  const HPReal residual = evaluate_series(m.ansatz, m.table, c, 5'000) - x;
  CHECK(abs(residual) < ldexp(abs(x), -(bits - 24)));
}

TEST_CASE("depth and map validation") {
  CHECK_THROWS(estimate_c(MapSpec::standard(MapId::quad_shift), 999, 8, kPolicy));
  CHECK_THROWS_AS(estimate_c(MapSpec::standard(MapId::simple_radical), 10'000, 8, kPolicy),
                  UnsupportedMapError);
  CHECK_THROWS(convergence_study(MapSpec::standard(MapId::quad_shift), {10'000}, 8, kPolicy));
  CHECK_THROWS(
      convergence_study(MapSpec::standard(MapId::quad_shift), {10'000, 1'000}, 8, kPolicy));
}
