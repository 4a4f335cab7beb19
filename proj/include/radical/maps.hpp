#pragma once

// The seven recurrence maps, their radical-free implicit forms, and the
// deep-iteration engine with text checkpoints.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radical/casring.hpp"
#include "radical/hpnum.hpp"

namespace radical {

enum class MapId {
  simple_radical,   // x -> sqrt(1 + x)
  half_angle,       // x -> sqrt(1/2 + x/2)
  double_radical,   // x -> sqrt(2 + 2x)
  quad_shift,       // x -> (1 + sqrt(4x^2 + 1)) / 2
  root_shift,       // x -> (x + sqrt(x^2 + 4)) / 2
  product_radical,  // x -> sqrt(x (x + 1))
  add_inverse,      // x -> x + 1/x
};

inline constexpr MapId kAllMaps[] = {
    MapId::simple_radical, MapId::half_angle,      MapId::double_radical,
    MapId::quad_shift,     MapId::root_shift,      MapId::product_radical,
    MapId::add_inverse};

/// Maps whose iterates diverge and carry a log-power asymptotic series.
inline constexpr MapId kDivergentMaps[] = {MapId::quad_shift, MapId::root_shift,
                                           MapId::product_radical,
                                           MapId::add_inverse};

std::string_view to_string(MapId id);
/// Throws DomainError on an unknown name.
MapId parse_map_id(std::string_view name);
bool has_implicit_form(MapId id);

class UnsupportedMapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CorruptCheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapSpec {
  MapId id = MapId::simple_radical;
  /// Exact starting value, attached to index first_index.
  Rat seed;
  /// 1 for the golden-mean family, 0 for the divergent maps.
  int first_index = 0;

  /// Seed and index convention as published.
  static MapSpec standard(MapId id);
  MapSpec with_seed(Rat s) const;
};

/// One recurrence step. Throws DomainError outside the map's domain.
HPReal apply(const MapSpec& map, const HPReal& x);

/// LHS - RHS of the map's radical-free relation between consecutive iterates:
///   quad-shift       x'^2 - x' - x^2
///   root-shift       x' - 1/x' - x
///   product-radical  x'^2 - x^2 - x
///   add-inverse      x' - x - 1/x
/// Throws UnsupportedMapError for the golden-mean family.
HPReal implicit_residual(const MapSpec& map, const HPReal& x_prev,
                         const HPReal& x_next);

/// For x > 0, with f the root-shift rule and g the quad-shift rule, returns
/// (|g(x) - x f(1/x)|, |f(x) - x g(1/x)|).
std::pair<HPReal, HPReal> reciprocal_link_check(const HPReal& x);

/// Iteration state snapshot. Text form (three lines):
///   map=<id> k=<index> prec_bits=<p>
///   <decimal value with round_trip_digits(p) significant digits>
///   checksum=<16 lowercase hex digits>
/// The checksum is 64-bit FNV-1a over the bytes of line 1, a '\n', and line 2.
struct Checkpoint {
  MapId map = MapId::simple_radical;
  std::uint64_t k = 0;
  long prec_bits = 0;
  std::string value;  // decimal text, exact for prec_bits
  std::uint64_t checksum = 0;

  static Checkpoint capture(MapId map, std::uint64_t k, const HPReal& x);
  HPReal restore() const;
  std::uint64_t compute_checksum() const;

  std::string to_text() const;
  /// Throws CorruptCheckpointError on malformed text or checksum mismatch.
  static Checkpoint from_text(std::string_view text);
  void save(const std::string& path) const;
  static Checkpoint load(const std::string& path);
};

std::uint64_t fnv1a64(std::string_view bytes);

struct IterateOptions {
  /// Emit a checkpoint every this many steps (0 disables).
  std::uint64_t checkpoint_every = 0;
  std::function<void(const Checkpoint&)> on_checkpoint;
  std::optional<Checkpoint> resume;
  /// Called with (k, x_k) for every index reached, including the start.
  std::function<void(std::uint64_t, const HPReal&)> observer;
};

inline constexpr std::uint64_t kDefaultCheckpointEvery = 1'000'000;

/// x_n for the map at policy.working_bits(). n counts from map.first_index.
HPReal iterate(const MapSpec& map, std::uint64_t n, const PrecisionPolicy& policy,
               const IterateOptions& options = {});

/// Same as iterate but at an explicit precision (no guard-bit check).
HPReal iterate_at(const MapSpec& map, std::uint64_t n, long prec_bits,
                  const IterateOptions& options = {});

/// x_first .. x_last inclusive.
std::vector<HPReal> trajectory(const MapSpec& map, std::uint64_t last, long prec_bits);

}  // namespace radical
