#include "radical/report.hpp"

namespace radical::report {

void to_json(json& j, const IterateRecord& r) {
  j = json{{"map", r.map}, {"n", r.n}, {"digits", r.digits},
           {"prec_bits", r.prec_bits}, {"value", r.value}};
}

void from_json(const json& j, IterateRecord& r) {
  j.at("map").get_to(r.map);
  j.at("n").get_to(r.n);
  j.at("digits").get_to(r.digits);
  j.at("prec_bits").get_to(r.prec_bits);
  j.at("value").get_to(r.value);
}

void to_json(json& j, const ParisRecord& r) {
  j = json{{"terms", r.terms}, {"digits", r.digits}, {"product", r.product},
           {"scaled", r.scaled}, {"doubled", r.doubled}};
}

void from_json(const json& j, ParisRecord& r) {
  j.at("terms").get_to(r.terms);
  j.at("digits").get_to(r.digits);
  j.at("product").get_to(r.product);
  j.at("scaled").get_to(r.scaled);
  j.at("doubled").get_to(r.doubled);
}

void to_json(json& j, const EstimateRecord& r) {
  j = json{{"map", r.map},
           {"n", r.n},
           {"d", r.d},
           {"value", r.value},
           {"modeled_error", r.modeled_error},
           {"consistency_error", r.consistency_error}};
}

void from_json(const json& j, EstimateRecord& r) {
  j.at("map").get_to(r.map);
  j.at("n").get_to(r.n);
  j.at("d").get_to(r.d);
  j.at("value").get_to(r.value);
  j.at("modeled_error").get_to(r.modeled_error);
  j.at("consistency_error").get_to(r.consistency_error);
}

void to_json(json& j, const FixtureRecord& r) {
  j = json{{"id", r.id},           {"name", r.name},         {"passed", r.passed},
           {"measured", r.measured}, {"expected", r.expected}, {"detail", r.detail},
           {"seconds", r.seconds}};
}

void from_json(const json& j, FixtureRecord& r) {
  j.at("id").get_to(r.id);
  j.at("name").get_to(r.name);
  j.at("passed").get_to(r.passed);
  j.at("measured").get_to(r.measured);
  j.at("expected").get_to(r.expected);
  j.at("detail").get_to(r.detail);
  j.at("seconds").get_to(r.seconds);
}

EstimateRecord to_record(const extract::ConstantEstimate& e, int digits) {
  return {std::string(to_string(e.map)), e.n_used, e.truncation,
          to_decimal(e.value, digits), to_decimal(e.modeled_error, 6),
          to_decimal(e.consistency_error, 6)};
}

json cpoly_to_json(const CPoly& p) {
  json exact = json::array();
  for (const auto& q : p.coeffs()) {
    exact.push_back({q.rational_part().to_string(), q.sqrt2_part().to_string()});
  }
  return exact;
}

CPoly cpoly_from_json(const json& exact) {
  std::vector<QSqrt2> coeffs;
  for (const auto& pair : exact) {
    coeffs.emplace_back(Rat::parse(pair.at(0).get<std::string>()),
                        Rat::parse(pair.at(1).get<std::string>()));
  }
  return CPoly(std::move(coeffs));
}

namespace {

json term_json(const std::string& name, Monomial m, const CPoly& p) {
  return json{{"name", name}, {"d", m.d}, {"j", m.j}, {"expr", to_string(p)},
              {"exact", cpoly_to_json(p)}};
}

}  // namespace

json table_to_json(const AnsatzSpec& ansatz, const CoeffTable& table) {
  json fixed = json::array();
  for (const auto& f : ansatz.fixed) fixed.push_back(term_json(to_string(f.m), f.m, f.coeff));
  json coeffs = json::array();
  for (const auto& e : table.entries) coeffs.push_back(term_json(e.name, e.m, e.value));
  return json{{"map", std::string(to_string(table.map))},
              {"truncation", table.truncation},
              {"beyond_paper", table.beyond_paper},
              {"fixed", fixed},
              {"coefficients", coeffs}};
}

CoeffTable table_from_json(const json& j) {
  CoeffTable t;
  t.map = parse_map_id(j.at("map").get<std::string>());
  t.truncation = j.at("truncation").get<int>();
  t.beyond_paper = j.at("beyond_paper").get<bool>();
  for (const auto& c : j.at("coefficients")) {
    t.entries.push_back({c.at("name").get<std::string>(),
                         {c.at("d").get<int>(), c.at("j").get<int>()},
                         cpoly_from_json(c.at("exact"))});
  }
  return t;
}

json bound_rows_to_json(const std::vector<golden::BoundRow>& rows, int digits) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"k", r.k},
                   {"gap", to_decimal(r.gap, digits)},
                   {"bound", to_decimal(r.bound, digits)},
                   {"ok", r.ok}});
  }
  return out;
}

json cos_rows_to_json(const std::vector<golden::CosRow>& rows, int digits) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"k", r.k},
                   {"identity_error", to_decimal(r.identity_error, 6)},
                   {"scaled_value", to_decimal(r.scaled_value, digits)}});
  }
  return out;
}

json double_radical_rows_to_json(const std::vector<golden::DoubleRadicalRow>& rows,
                                 int digits) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"limit_gap", to_decimal(r.limit_gap, digits)},
                   {"ratio", r.ratio ? json(to_decimal(*r.ratio, digits)) : json(nullptr)},
                   {"scaled", to_decimal(r.scaled, digits)}});
  }
  return out;
}

}  // namespace radical::report
