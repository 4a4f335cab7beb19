#pragma once

// JSON records emitted by the command-line tool. Every record type has a
// parser so downstream tooling can read reports back.
//
// Keys (stable):
//   iterate    {map, n, digits, prec_bits, value}
//   paris      {terms, digits, product, scaled, doubled}
//   estimate   {map, n, d, value, modeled_error, consistency_error}
//   table      {map, truncation, beyond_paper, fixed: [term], coefficients: [term]}
//     term     {name, d, j, expr, exact: [[a, b], ...]}   a + b*sqrt2 per C^n,
//                                                         a and b as "p/q"
//   bound row  {k, gap, bound, ok}
//   cos row    {k, identity_error, scaled_value}
//   double-radical row {n, limit_gap, ratio (null at n = 1), scaled}
//   fixture    {id, name, passed, measured, expected, detail, seconds}

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radical/extract.hpp"
#include "radical/golden.hpp"
#include "radical/series.hpp"

namespace radical::report {

using nlohmann::json;

struct IterateRecord {
  std::string map;
  std::uint64_t n = 0;
  int digits = 0;
  long prec_bits = 0;
  std::string value;

  friend bool operator==(const IterateRecord&, const IterateRecord&) = default;
};

struct ParisRecord {
  std::uint64_t terms = 0;
  int digits = 0;
  std::string product;
  std::string scaled;
  std::string doubled;

  friend bool operator==(const ParisRecord&, const ParisRecord&) = default;
};

struct EstimateRecord {
  std::string map;
  std::uint64_t n = 0;
  int d = 0;
  std::string value;
  std::string modeled_error;
  std::string consistency_error;

  friend bool operator==(const EstimateRecord&, const EstimateRecord&) = default;
};

struct FixtureRecord {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string expected;
  std::string detail;
  double seconds = 0.0;

  friend bool operator==(const FixtureRecord&, const FixtureRecord&) = default;
};

void to_json(json& j, const IterateRecord& r);
void from_json(const json& j, IterateRecord& r);
void to_json(json& j, const ParisRecord& r);
void from_json(const json& j, ParisRecord& r);
void to_json(json& j, const EstimateRecord& r);
void from_json(const json& j, EstimateRecord& r);
void to_json(json& j, const FixtureRecord& r);
void from_json(const json& j, FixtureRecord& r);

EstimateRecord to_record(const extract::ConstantEstimate& e, int digits);

json cpoly_to_json(const CPoly& p);
CPoly cpoly_from_json(const json& exact);

json table_to_json(const AnsatzSpec& ansatz, const CoeffTable& table);
/// Exact coefficients are rebuilt from the "exact" pairs; "expr" is ignored.
CoeffTable table_from_json(const json& j);

json bound_rows_to_json(const std::vector<golden::BoundRow>& rows, int digits);
json cos_rows_to_json(const std::vector<golden::CosRow>& rows, int digits);
json double_radical_rows_to_json(const std::vector<golden::DoubleRadicalRow>& rows,
                                 int digits);

}  // namespace radical::report
