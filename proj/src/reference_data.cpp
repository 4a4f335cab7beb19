#include "radical/reference_data.hpp"

#include <initializer_list>

namespace radical::reference {

namespace {

CPoly rational_poly(std::initializer_list<const char*> coeffs) {
  std::vector<QSqrt2> c;
  for (const char* s : coeffs) c.emplace_back(Rat::parse(s));
  return CPoly(std::move(c));
}

// Each entry is (rational part, sqrt2 part) of one power of C.
CPoly surd_poly(std::initializer_list<std::pair<const char*, const char*>> coeffs) {
  std::vector<QSqrt2> c;
  for (const auto& [a, b] : coeffs) c.emplace_back(Rat::parse(a), Rat::parse(b));
  return CPoly(std::move(c));
}

}  // namespace

const std::vector<ShiftDisplay>& integer_lattice_shifts() {
  static const std::vector<ShiftDisplay> kDisplays = {
      {"ln(k+1)", {0, 1}, 10,
       {{0, 1, "1"}, {2, 0, "1"}, {4, 0, "-1/2"}, {6, 0, "1/3"}, {8, 0, "-1/4"}, {10, 0, "1/5"}}},
      {"ln(k+1)/(k+1)", {2, 1}, 10,
       {{2, 1, "1"}, {4, 1, "-1"}, {6, 1, "1"}, {8, 1, "-1"}, {10, 1, "1"},
        {4, 0, "1"}, {6, 0, "-3/2"}, {8, 0, "11/6"}, {10, 0, "-25/12"}}},
      {"1/(k+1)", {2, 0}, 10,
       {{2, 0, "1"}, {4, 0, "-1"}, {6, 0, "1"}, {8, 0, "-1"}, {10, 0, "1"}}},
      {"ln(k+1)^2/(k+1)^2", {4, 2}, 10,
       {{4, 2, "1"}, {6, 2, "-2"}, {8, 2, "3"}, {10, 2, "-4"},
        {6, 1, "2"}, {8, 1, "-5"}, {10, 1, "26/3"},
        {8, 0, "1"}, {10, 0, "-3"}}},
      {"ln(k+1)/(k+1)^2", {4, 1}, 10,
       {{4, 1, "1"}, {6, 1, "-2"}, {8, 1, "3"}, {10, 1, "-4"},
        {6, 0, "1"}, {8, 0, "-5/2"}, {10, 0, "13/3"}}},
      {"1/(k+1)^2", {4, 0}, 10, {{4, 0, "1"}, {6, 0, "-2"}, {8, 0, "3"}, {10, 0, "-4"}}},
      {"ln(k+1)^3/(k+1)^3", {6, 3}, 10,
       {{6, 3, "1"}, {8, 3, "-3"}, {10, 3, "6"}, {8, 2, "3"}, {10, 2, "-21/2"}, {10, 1, "3"}}},
      {"ln(k+1)^2/(k+1)^3", {6, 2}, 10,
       {{6, 2, "1"}, {8, 2, "-3"}, {10, 2, "6"}, {8, 1, "2"}, {10, 1, "-7"}, {10, 0, "1"}}},
      {"ln(k+1)/(k+1)^3", {6, 1}, 10,
       {{6, 1, "1"}, {8, 1, "-3"}, {10, 1, "6"}, {8, 0, "1"}, {10, 0, "-7/2"}}},
      {"1/(k+1)^3", {6, 0}, 10, {{6, 0, "1"}, {8, 0, "-3"}, {10, 0, "6"}}},
      {"ln(k+1)^4/(k+1)^4", {8, 4}, 10, {{8, 4, "1"}, {10, 4, "-4"}, {10, 3, "4"}}},
      {"ln(k+1)^3/(k+1)^4", {8, 3}, 10, {{8, 3, "1"}, {10, 3, "-4"}, {10, 2, "3"}}},
      {"ln(k+1)^2/(k+1)^4", {8, 2}, 10, {{8, 2, "1"}, {10, 2, "-4"}, {10, 1, "2"}}},
      {"ln(k+1)/(k+1)^4", {8, 1}, 10, {{8, 1, "1"}, {10, 1, "-4"}, {10, 0, "1"}}},
      {"1/(k+1)^4", {8, 0}, 10, {{8, 0, "1"}, {10, 0, "-4"}}},
  };
  return kDisplays;
}

const std::vector<ShiftDisplay>& half_lattice_shifts() {
  static const std::vector<ShiftDisplay> kDisplays = {
      {"(k+1)^(1/2)", {-1, 0}, 9,
       {{-1, 0, "1"}, {1, 0, "1/2"}, {3, 0, "-1/8"}, {5, 0, "1/16"}, {7, 0, "-5/128"},
        {9, 0, "7/256"}}},
      {"ln(k+1)/(k+1)^(1/2)", {1, 1}, 9,
       {{1, 1, "1"}, {3, 1, "-1/2"}, {5, 1, "3/8"}, {7, 1, "-5/16"}, {9, 1, "35/128"},
        {3, 0, "1"}, {5, 0, "-1"}, {7, 0, "23/24"}, {9, 0, "-11/12"}}},
      {"1/(k+1)^(1/2)", {1, 0}, 9,
       {{1, 0, "1"}, {3, 0, "-1/2"}, {5, 0, "3/8"}, {7, 0, "-5/16"}, {9, 0, "35/128"}}},
      {"ln(k+1)^2/(k+1)^(3/2)", {3, 2}, 9,
       {{3, 2, "1"}, {5, 2, "-3/2"}, {7, 2, "15/8"}, {9, 2, "-35/16"},
        {5, 1, "2"}, {7, 1, "-4"}, {9, 1, "71/12"},
        {7, 0, "1"}, {9, 0, "-5/2"}}},
      {"ln(k+1)/(k+1)^(3/2)", {3, 1}, 9,
       {{3, 1, "1"}, {5, 1, "-3/2"}, {7, 1, "15/8"}, {9, 1, "-35/16"},
        {5, 0, "1"}, {7, 0, "-2"}, {9, 0, "71/24"}}},
      {"1/(k+1)^(3/2)", {3, 0}, 9,
       {{3, 0, "1"}, {5, 0, "-3/2"}, {7, 0, "15/8"}, {9, 0, "-35/16"}}},
      {"ln(k+1)^3/(k+1)^(5/2)", {5, 3}, 9,
       {{5, 3, "1"}, {7, 3, "-5/2"}, {9, 3, "35/8"}, {7, 2, "3"}, {9, 2, "-9"}, {9, 1, "3"}}},
      {"ln(k+1)^2/(k+1)^(5/2)", {5, 2}, 9,
       {{5, 2, "1"}, {7, 2, "-5/2"}, {9, 2, "35/8"}, {7, 1, "2"}, {9, 1, "-6"}, {9, 0, "1"}}},
      {"ln(k+1)/(k+1)^(5/2)", {5, 1}, 9,
       {{5, 1, "1"}, {7, 1, "-5/2"}, {9, 1, "35/8"}, {7, 0, "1"}, {9, 0, "-3"}}},
      {"1/(k+1)^(5/2)", {5, 0}, 9, {{5, 0, "1"}, {7, 0, "-5/2"}, {9, 0, "35/8"}}},
  };
  return kDisplays;
}

LogPowSeries expected_series(const ShiftDisplay& display) {
  LogPowSeries s(display.D);
  for (const auto& t : display.terms) {
    s.add_term({t.d, t.j}, CPoly(QSqrt2(Rat::parse(t.coeff))));
  }
  return s;
}

std::vector<NamedPoly> published_table(MapId map) {
  switch (map) {
    case MapId::quad_shift:
      return {
          {"p1", rational_poly({"1/8"})},
          {"p0", rational_poly({"0", "1/2"})},
          {"q2", rational_poly({"-1/32"})},
          {"q1", rational_poly({"1/16", "-1/4"})},
          {"q0", rational_poly({"1/96", "1/4", "-1/2"})},
          {"r3", rational_poly({"1/96"})},
          {"r2", rational_poly({"-3/64", "1/8"})},
          {"r1", rational_poly({"1/48", "-3/8", "1/2"})},
          {"r0", rational_poly({"7/576", "1/12", "-3/4", "2/3"})},
          {"s4", rational_poly({"-1/256"})},
          {"s3", rational_poly({"11/384", "-1/16"})},
          {"s2", rational_poly({"-5/128", "11/32", "-3/8"})},
          {"s1", rational_poly({"-1/128", "-5/16", "11/8", "-1"})},
          {"s0", rational_poly({"47/5760", "-1/32", "-5/8", "11/6", "-1"})},
      };
    case MapId::product_radical:
      return {
          {"p1", rational_poly({"1/8"})},
          {"p0", rational_poly({"0", "1/2"})},
          {"q2", rational_poly({"1/32"})},
          {"q1", rational_poly({"-1/16", "1/4"})},
          {"q0", rational_poly({"-1/96", "-1/4", "1/2"})},
          {"r3", rational_poly({"1/96"})},
          {"r2", rational_poly({"-3/64", "1/8"})},
          {"r1", rational_poly({"1/48", "-3/8", "1/2"})},
          {"r0", rational_poly({"7/576", "1/12", "-3/4", "2/3"})},
          {"s4", rational_poly({"1/256"})},
          {"s3", rational_poly({"-11/384", "1/16"})},
          {"s2", rational_poly({"5/128", "-11/32", "3/8"})},
          {"s1", rational_poly({"1/128", "5/16", "-11/8", "1"})},
          {"s0", rational_poly({"-47/5760", "1/32", "5/8", "-11/6", "1"})},
      };
    case MapId::root_shift:
      return {
          {"p2", surd_poly({{"0", "-1/128"}})},
          {"p1", surd_poly({{"0", "1/32"}, {"-1/8", "0"}})},
          {"p0", surd_poly({{"0", "-1/32"}, {"1/4", "0"}, {"0", "-1/4"}})},
          {"q3", surd_poly({{"0", "-1/1024"}})},
          {"q2", surd_poly({{"0", "1/128"}, {"-3/128", "0"}})},
          {"q1", surd_poly({{"0", "-5/256"}, {"1/8", "0"}, {"0", "-3/32"}})},
          {"q0", surd_poly({{"0", "11/768"}, {"-5/32", "0"}, {"0", "1/4"}, {"-1/4", "0"}})},
      };
    default:
      throw UnsupportedMapError("no published coefficient table for " +
                                std::string(to_string(map)));
  }
}

std::vector<std::pair<Monomial, CPoly>> product_radical_leading_terms() {
  return {{{-2, 0}, rational_poly({"1/2"})},
          {{0, 1}, rational_poly({"-1/4"})},
          {{0, 0}, rational_poly({"0", "-1"})}};
}

const char* published_constant(MapId map) {
  switch (map) {
    case MapId::quad_shift:
      return "0.8232354508791921603541165";
    case MapId::root_shift:
      return "0.4117221539745403446660605";
    case MapId::product_radical:
      return "-1.1751774424585571398132856";
    default:
      throw UnsupportedMapError("no published constant for " + std::string(to_string(map)));
  }
}

}  // namespace radical::reference
