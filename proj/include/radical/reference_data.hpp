#pragma once

// Published reference values: the closed-form re-expansions of shifted
// monomials, the coefficient tables of the divergent maps, and the printed
// constants. Used by the `verify` suite.

#include <string>
#include <utility>
#include <vector>

#include "radical/casring.hpp"
#include "radical/maps.hpp"
#include "radical/series.hpp"

namespace radical::reference {

struct ShiftTerm {
  int d;
  int j;
  const char* coeff;  // rational "p/q"
};

/// A monomial shifted k -> k+1 and re-expanded. `terms` lists every nonzero
/// coefficient through twice-exponent D (the leading ln(k) of ln(k+1) is
/// implied in print; it is listed here).
struct ShiftDisplay {
  const char* label;
  Monomial input;
  int D;
  std::vector<ShiftTerm> terms;
};

/// Re-expansions used for the integer-power maps, then the half-integer ones.
const std::vector<ShiftDisplay>& integer_lattice_shifts();
const std::vector<ShiftDisplay>& half_lattice_shifts();

LogPowSeries expected_series(const ShiftDisplay& display);

using NamedPoly = std::pair<std::string, CPoly>;

/// Slot coefficients in print order. Throws UnsupportedMapError for
/// add-inverse (published only as "root-shift up to sign") and the
/// golden-mean family.
std::vector<NamedPoly> published_table(MapId map);

/// Leading terms printed with the product-radical series: k/2 - ln(k)/4 - C.
std::vector<std::pair<Monomial, CPoly>> product_radical_leading_terms();

/// Printed 25-digit constants ("0.8232354508791921603541165" etc.).
const char* published_constant(MapId map);

inline constexpr const char* kParisConstant = "1.0986419643941564857346689";
inline constexpr const char* kQuadShiftDoubled = "1.6464707";
inline constexpr const char* kRootShiftOverSqrt2 = "0.291131527";

}  // namespace radical::reference
