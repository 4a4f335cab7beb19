#pragma once

// Truncated log-power series  sum c[d,j] * k^(-d/2) * ln(k)^j  with CPoly
// coefficients, and the coefficient solver that matches both sides of a map's
// implicit form after the substitution k -> k+1.
//
// Exponents are stored doubled (d) so integer and half-integer powers of k
// share one lattice: k^1 is d = -2, k^(1/2) is d = -1, 1/k is d = 2.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "radical/casring.hpp"
#include "radical/hpnum.hpp"
#include "radical/maps.hpp"

namespace radical {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// k^(-d/2) * ln(k)^j. Ordered by decreasing significance: d ascending, then
/// j descending.
struct Monomial {
  int d = 0;
  int j = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    return b.j <=> a.j;
  }
};

std::string to_string(const Monomial& m);

class LogPowSeries {
 public:
  using Terms = std::map<Monomial, CPoly>;

  /// Empty series known through twice-exponent `order`.
  explicit LogPowSeries(int order) : order_(order) {}

  static LogPowSeries constant(const CPoly& c, int order);
  static LogPowSeries monomial(Monomial m, const CPoly& c, int order);

  int order() const { return order_; }
  /// Set when a term beyond the truncation was discarded on insertion.
  bool overflowed() const { return overflowed_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CPoly coeff(Monomial m) const;
  /// Smallest d carrying a term. Throws SeriesError for the zero series.
  int min_d() const;

  /// Adds c * m. Terms with d > order are discarded and flag overflow.
  void add_term(Monomial m, const CPoly& c);
  LogPowSeries truncated(int order) const;

  /// Log powers stay within j <= (d - d_min)/2 + 4.
  bool log_powers_bounded(int d_min) const;

  LogPowSeries& operator+=(const LogPowSeries& o);
  LogPowSeries& operator-=(const LogPowSeries& o);
  LogPowSeries& operator*=(const CPoly& s);
  LogPowSeries operator-() const;
  friend LogPowSeries operator+(LogPowSeries a, const LogPowSeries& b) { return a += b; }
  friend LogPowSeries operator-(LogPowSeries a, const LogPowSeries& b) { return a -= b; }
  friend LogPowSeries operator*(LogPowSeries a, const CPoly& s) { return a *= s; }
  /// Coefficient-wise equality; truncation orders are not compared.
  friend bool operator==(const LogPowSeries& a, const LogPowSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
  int order_;
  bool overflowed_ = false;
};

/// s(k+1) re-expanded in k through twice-exponent D, using
///   ln(k+1) = ln(k) + sum_{m>=1} (-1)^(m+1) / (m k^m)
///   (k+1)^(-e) = k^(-e) * sum_m binom(-e, m) k^(-m).
LogPowSeries shift_expand(const LogPowSeries& s, int D);
/// Product truncated at D: only pairs with d_a + d_b <= D contribute.
LogPowSeries mul(const LogPowSeries& a, const LogPowSeries& b, int D);
LogPowSeries square(const LogPowSeries& a, int D);
/// 1/a through D. The leading term must be the unique minimal-d term, carry no
/// logarithm, and have a nonzero constant coefficient.
LogPowSeries reciprocal(const LogPowSeries& a, int D);

// ---------------------------------------------------------------------------
// Ansatz and coefficient solving

struct FixedTerm {
  Monomial m;
  CPoly coeff;
};

struct SlotSpec {
  std::string name;
  Monomial m;
};

using SlotValues = std::map<std::string, CPoly>;

struct AnsatzSpec {
  MapId map = MapId::quad_shift;
  /// Known leading part, e.g. k/2 + ln(k)/4 + C for quad-shift.
  std::vector<FixedTerm> fixed;
  /// Unknown coefficients, in solving order.
  std::vector<SlotSpec> slots;
  /// Largest twice-exponent carried by a slot.
  int truncation = 0;
  /// Largest twice-exponent at which the two sides are matched.
  int match_order = 0;

  /// Published truncation for the map: 8 (through k^-4) for quad-shift and
  /// product-radical, 5 (through k^-5/2) for root-shift and add-inverse.
  static int default_truncation(MapId map);
  /// Throws UnsupportedMapError for maps without an asymptotic series.
  static AnsatzSpec standard(MapId map);
  static AnsatzSpec with_truncation(MapId map, int truncation);

  /// Deeper than anything printed for this map.
  bool beyond_paper() const { return truncation > default_truncation(map); }
  int lead_d() const;
  const SlotSpec& slot(const std::string& name) const;
  /// Fixed part plus slot terms; slots missing from `values` are zero.
  LogPowSeries build(const SlotValues& values, int order) const;
};

struct FunctionalSides {
  LogPowSeries lhs;
  LogPowSeries rhs;
};

/// Both sides of the implicit form with x_k replaced by the ansatz, through
/// match_order:
///   quad-shift       x(k+1)^2 - x(k+1)   =  x(k)^2
///   root-shift       x(k+1) - 1/x(k+1)   =  x(k)
///   product-radical  x(k+1)^2            =  x(k)^2 + x(k)
///   add-inverse      x(k+1)              =  x(k) + 1/x(k)
FunctionalSides functional_sides(const AnsatzSpec& ansatz, const SlotValues& values);

/// A coefficient viewed as a polynomial of degree <= 2 in the slot unknowns.
struct SlotForm {
  CPoly constant;
  std::map<std::string, CPoly> linear;
  /// Keys (a, b) list a before b in slot order; (a, a) holds the square term.
  std::map<std::pair<std::string, std::string>, CPoly> quadratic;

  friend bool operator==(const SlotForm&, const SlotForm&) = default;
};

struct SymbolicSides {
  std::map<Monomial, SlotForm> lhs;
  std::map<Monomial, SlotForm> rhs;
};

/// functional_sides with every slot left symbolic, recovered by probing slot
/// values and confirmed against an extra generic probe. Throws SeriesError if
/// some coefficient is not of degree <= 2 in the slots.
SymbolicSides functional_sides_symbolic(const AnsatzSpec& ansatz);

struct CoeffEntry {
  std::string name;
  Monomial m;
  CPoly value;
};

struct CoeffTable {
  MapId map = MapId::quad_shift;
  int truncation = 0;
  bool beyond_paper = false;
  std::vector<CoeffEntry> entries;

  /// Throws std::out_of_range for unknown names.
  const CPoly& at(const std::string& name) const;
  SlotValues values() const;
};

/// Triangular elimination: repeatedly find a matching equation that depends
/// on exactly one undetermined slot, affinely with a constant nonzero slope,
/// solve it exactly and substitute. Ends by asserting that lhs - rhs is the
/// zero series through match_order. Throws SeriesError otherwise.
CoeffTable solve_coefficients(const AnsatzSpec& ansatz);

/// Per-coefficient sign s with a.value == s * b.value; 0 where no overall sign
/// relates the two polynomials. Entries are paired by position.
std::vector<std::pair<std::string, int>> coefficient_sign_pattern(const CoeffTable& a,
                                                                   const CoeffTable& b);

/// Numeric coefficients of the series at index k as a polynomial in C:
/// result[n] multiplies C^n. Terms with d > max_d are skipped.
std::vector<HPReal> series_in_c(const AnsatzSpec& ansatz, const CoeffTable& table,
                                std::uint64_t k, long prec_bits,
                                std::optional<int> max_d = std::nullopt);

/// Value of the truncated series at index k with C = c (k >= 2).
HPReal evaluate_series(const AnsatzSpec& ansatz, const CoeffTable& table, const HPReal& c,
                       std::uint64_t k, std::optional<int> max_d = std::nullopt);

/// Sum of the terms with exactly twice-exponent d, at C = c.
HPReal evaluate_block(const AnsatzSpec& ansatz, const CoeffTable& table, const HPReal& c,
                      std::uint64_t k, int d);

}  // namespace radical
