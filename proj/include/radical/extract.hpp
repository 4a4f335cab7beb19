#pragma once

// Numeric extraction of the intrinsic constant C of a divergent map: iterate
// to depth N, set x_N equal to the truncated asymptotic series and solve the
// resulting polynomial equation in C by Newton's method.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "radical/hpnum.hpp"
#include "radical/maps.hpp"
#include "radical/series.hpp"

namespace radical::extract {

class ExtractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMinDepth = 1000;
inline constexpr std::uint64_t kDefaultDepth = 10'000'000;
inline constexpr int kDefaultDigits = 40;

struct ConstantEstimate {
  MapId map;
  HPReal value;
  std::uint64_t n_used;
  int truncation;
  /// Heuristic: size of the first omitted block of the series at N divided by
  /// the sensitivity d(series)/dC. Not a rigorous bound.
  HPReal modeled_error;
  /// |estimate(N) - estimate(N/10)|.
  HPReal consistency_error;
};

/// Table at the requested truncation plus the next block beyond it, which
/// feeds the error model.
struct SeriesModel {
  AnsatzSpec ansatz;
  CoeffTable table;
  AnsatzSpec next_ansatz;
  CoeffTable next_table;
  int next_d;

  static SeriesModel build(MapId map, int truncation);
};

/// Root of series(C; N) = x_N nearest to the linearised guess.
/// Throws ExtractError if Newton has not converged after 64 steps.
HPReal solve_for_c(const SeriesModel& model, std::uint64_t n, const HPReal& x_n);

/// Error model for a solved C at depth n (see ConstantEstimate).
HPReal modeled_error(const SeriesModel& model, std::uint64_t n, const HPReal& c);

ConstantEstimate estimate_c(const MapSpec& map, std::uint64_t n, int truncation,
                            const PrecisionPolicy& policy);
ConstantEstimate estimate_c(const MapSpec& map, std::uint64_t n, const SeriesModel& model,
                            const PrecisionPolicy& policy, const IterateOptions& options = {});

struct NamedValue {
  std::string name;
  HPReal value;
  /// Value quoted in the literature for comparison, as printed.
  std::string reference;
};

/// 2C for quad-shift, C/sqrt2 for root-shift. Throws UnsupportedMapError
/// for other maps.
std::vector<NamedValue> derived_checks(const ConstantEstimate& e);

/// Estimates at every depth in `depths` (ascending, at least two entries)
/// from a single trajectory.
std::vector<ConstantEstimate> convergence_study(const MapSpec& map,
                                                const std::vector<std::uint64_t>& depths,
                                                int truncation, const PrecisionPolicy& policy);

}  // namespace radical::extract
