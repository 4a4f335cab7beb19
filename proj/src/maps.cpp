#include "radical/maps.hpp"

#include <array>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace radical {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

struct MapInfo {
  MapId id;
  std::string_view name;
  long seed_num;
  long seed_den;
  int first_index;
};

constexpr std::array<MapInfo, 7> kInfo{{
    {MapId::simple_radical, "simple-radical", 1, 1, 1},
    {MapId::half_angle, "half-angle", 0, 1, 1},
    {MapId::double_radical, "double-radical", 1, 1, 1},
    {MapId::quad_shift, "quad-shift", 1, 1, 0},
    {MapId::root_shift, "root-shift", 0, 1, 0},
    {MapId::product_radical, "product-radical", 1, 1, 0},
    {MapId::add_inverse, "add-inverse", 1, 1, 0},
}};

const MapInfo& info(MapId id) {
  for (const auto& i : kInfo) {
    if (i.id == id) return i;
  }
  throw UnsupportedMapError("unknown map id");
}

[[noreturn]] void domain_violation(MapId id, const char* bound) {
  throw DomainError("map " + std::string(to_string(id)) + " requires " + bound);
}

// In-place single step with one scratch register; the hot loop of iterate.
class Stepper {
 public:
  Stepper(MapId id, long prec_bits) : id_(id) { mpfr_init2(t_, prec_bits); }
  Stepper(const Stepper&) = delete;
  Stepper& operator=(const Stepper&) = delete;
  ~Stepper() { mpfr_clear(t_); }

  void check_domain(mpfr_srcptr x) const {
    switch (id_) {
      case MapId::simple_radical:
        if (mpfr_cmp_si(x, -1) < 0) domain_violation(id_, "x >= -1");
        break;
      case MapId::add_inverse:
        if (mpfr_sgn(x) <= 0) domain_violation(id_, "x > 0");
        break;
      default:
        if (mpfr_sgn(x) < 0) domain_violation(id_, "x >= 0");
        break;
    }
  }

  void step(mpfr_ptr x) {
    check_domain(x);
    switch (id_) {
      case MapId::simple_radical:
        mpfr_add_ui(t_, x, 1, kRound);
        mpfr_sqrt(x, t_, kRound);
        break;
      case MapId::half_angle:
        mpfr_add_ui(t_, x, 1, kRound);
        mpfr_div_2ui(t_, t_, 1, kRound);
        mpfr_sqrt(x, t_, kRound);
        break;
      case MapId::double_radical:
        mpfr_add_ui(t_, x, 1, kRound);
        mpfr_mul_2ui(t_, t_, 1, kRound);
        mpfr_sqrt(x, t_, kRound);
        break;
      case MapId::quad_shift:
        mpfr_sqr(t_, x, kRound);
        mpfr_mul_2ui(t_, t_, 2, kRound);
        mpfr_add_ui(t_, t_, 1, kRound);
        mpfr_sqrt(t_, t_, kRound);
        mpfr_add_ui(t_, t_, 1, kRound);
        mpfr_div_2ui(x, t_, 1, kRound);
        break;
      case MapId::root_shift:
        mpfr_sqr(t_, x, kRound);
        mpfr_add_ui(t_, t_, 4, kRound);
        mpfr_sqrt(t_, t_, kRound);
        mpfr_add(t_, t_, x, kRound);
        mpfr_div_2ui(x, t_, 1, kRound);
        break;
      case MapId::product_radical:
        mpfr_add_ui(t_, x, 1, kRound);
        mpfr_mul(t_, t_, x, kRound);
        mpfr_sqrt(x, t_, kRound);
        break;
      case MapId::add_inverse:
        mpfr_ui_div(t_, 1, x, kRound);
        mpfr_add(x, x, t_, kRound);
        break;
    }
  }

 private:
  MapId id_;
  mpfr_t t_;
};

}  // namespace

std::string_view to_string(MapId id) { return info(id).name; }

MapId parse_map_id(std::string_view name) {
  for (const auto& i : kInfo) {
    if (i.name == name) return i.id;
  }
  throw DomainError("unknown map '" + std::string(name) + "'");
}

bool has_implicit_form(MapId id) {
  return id == MapId::quad_shift || id == MapId::root_shift ||
         id == MapId::product_radical || id == MapId::add_inverse;
}

MapSpec MapSpec::standard(MapId id) {
  const auto& i = info(id);
  return {id, Rat(i.seed_num, i.seed_den), i.first_index};
}

MapSpec MapSpec::with_seed(Rat s) const {
  MapSpec m = *this;
  m.seed = std::move(s);
  return m;
}

HPReal apply(const MapSpec& map, const HPReal& x) {
  HPReal r(x);
  Stepper s(map.id, x.prec_bits());
  s.step(r.raw_mut());
  return r;
}

HPReal implicit_residual(const MapSpec& map, const HPReal& x_prev,
                         const HPReal& x_next) {
  switch (map.id) {
    case MapId::quad_shift:
      return x_next * x_next - x_next - x_prev * x_prev;
    case MapId::root_shift:
      return x_next - 1 / x_next - x_prev;
    case MapId::product_radical:
      return x_next * x_next - x_prev * x_prev - x_prev;
    case MapId::add_inverse:
      return x_next - x_prev - 1 / x_prev;
    default:
      throw UnsupportedMapError("map " + std::string(to_string(map.id)) +
                                " has no implicit form");
  }
}

std::pair<HPReal, HPReal> reciprocal_link_check(const HPReal& x) {
  if (x.sign() <= 0) throw DomainError("reciprocal_link_check requires x > 0");
  const MapSpec f = MapSpec::standard(MapId::root_shift);
  const MapSpec g = MapSpec::standard(MapId::quad_shift);
  const HPReal y = 1 / x;
  HPReal first = abs(apply(g, x) - x * apply(f, y));
  HPReal second = abs(apply(f, x) - x * apply(g, y));
  return {std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------
// Checkpoints

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string header_line(const Checkpoint& c) {
  return "map=" + std::string(to_string(c.map)) + " k=" + std::to_string(c.k) +
         " prec_bits=" + std::to_string(c.prec_bits);
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

}  // namespace

Checkpoint Checkpoint::capture(MapId map, std::uint64_t k, const HPReal& x) {
  Checkpoint c;
  c.map = map;
  c.k = k;
  c.prec_bits = x.prec_bits();
  c.value = to_decimal(x, round_trip_digits(c.prec_bits));
  c.checksum = c.compute_checksum();
  return c;
}

HPReal Checkpoint::restore() const {
  HPReal x = HPReal::parse(value, prec_bits);
  if (to_decimal(x, round_trip_digits(prec_bits)) != value) {
    throw CorruptCheckpointError("checkpoint value does not round-trip at " +
                                 std::to_string(prec_bits) + " bits");
  }
  return x;
}

std::uint64_t Checkpoint::compute_checksum() const {
  return fnv1a64(header_line(*this) + "\n" + value);
}

std::string Checkpoint::to_text() const {
  return header_line(*this) + "\n" + value + "\nchecksum=" + hex16(checksum) + "\n";
}

Checkpoint Checkpoint::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string l1, l2, l3;
  if (!std::getline(in, l1) || !std::getline(in, l2) || !std::getline(in, l3)) {
    throw CorruptCheckpointError("checkpoint: expected three lines");
  }
  Checkpoint c;
  char map_name[64] = {0};
  unsigned long long k = 0;
  long prec = 0;
  int consumed = 0;
  if (std::sscanf(l1.c_str(), "map=%63s k=%llu prec_bits=%ld%n", map_name, &k, &prec,
                  &consumed) != 3 ||
      static_cast<size_t>(consumed) != l1.size()) {
    throw CorruptCheckpointError("checkpoint: malformed header '" + l1 + "'");
  }
  try {
    c.map = parse_map_id(map_name);
  } catch (const DomainError& e) {
    throw CorruptCheckpointError(std::string("checkpoint: ") + e.what());
  }
  c.k = k;
  c.prec_bits = prec;
  c.value = l2;
  if (l3.rfind("checksum=", 0) != 0 || l3.size() != 9 + 16) {
    throw CorruptCheckpointError("checkpoint: malformed checksum line");
  }
  try {
    size_t pos = 0;
    c.checksum = std::stoull(l3.substr(9), &pos, 16);
    if (pos != 16) throw std::invalid_argument("hex");
  } catch (const std::exception&) {
    throw CorruptCheckpointError("checkpoint: malformed checksum");
  }
  if (c.checksum != c.compute_checksum()) {
    throw CorruptCheckpointError("checkpoint: checksum mismatch");
  }
  try {
    (void)c.restore();
  } catch (const DomainError& e) {
    throw CorruptCheckpointError(std::string("checkpoint: ") + e.what());
  }
  return c;
}

void Checkpoint::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << to_text();
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot move checkpoint into place: " + path);
  }
}

Checkpoint Checkpoint::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

// ---------------------------------------------------------------------------
// Iteration

HPReal iterate_at(const MapSpec& map, std::uint64_t n, long prec_bits,
                  const IterateOptions& options) {
  const auto first = static_cast<std::uint64_t>(map.first_index);
  if (n < first) {
    throw DomainError("map " + std::string(to_string(map.id)) + " starts at k=" +
                      std::to_string(first));
  }
  HPReal x(prec_bits);
  std::uint64_t k = first;
  if (options.resume) {
    const Checkpoint& cp = *options.resume;
    if (cp.checksum != cp.compute_checksum()) {
      throw CorruptCheckpointError("checkpoint: checksum mismatch");
    }
    if (cp.map != map.id) {
      throw DomainError("checkpoint is for map " + std::string(to_string(cp.map)));
    }
    if (cp.prec_bits != prec_bits) {
      throw DomainError("checkpoint precision " + std::to_string(cp.prec_bits) +
                        " differs from working precision " + std::to_string(prec_bits));
    }
    if (cp.k > n || cp.k < first) {
      throw DomainError("checkpoint index " + std::to_string(cp.k) +
                        " outside [" + std::to_string(first) + ", " + std::to_string(n) + "]");
    }
    x = cp.restore();
    k = cp.k;
  } else {
    x = map.seed.to_hp(prec_bits);
  }
  if (options.observer) options.observer(k, x);
  Stepper stepper(map.id, prec_bits);
  while (k < n) {
    stepper.step(x.raw_mut());
    ++k;
    if (options.observer) options.observer(k, x);
    if (options.checkpoint_every != 0 && k % options.checkpoint_every == 0 &&
        options.on_checkpoint) {
      options.on_checkpoint(Checkpoint::capture(map.id, k, x));
    }
  }
  return x;
}

HPReal iterate(const MapSpec& map, std::uint64_t n, const PrecisionPolicy& policy,
               const IterateOptions& options) {
  policy.validate(n);
  return iterate_at(map, n, policy.working_bits(), options);
}

std::vector<HPReal> trajectory(const MapSpec& map, std::uint64_t last, long prec_bits) {
  std::vector<HPReal> out;
  IterateOptions opt;
  opt.observer = [&](std::uint64_t, const HPReal& x) { out.push_back(x); };
  (void)iterate_at(map, last, prec_bits, opt);
  return out;
}

}  // namespace radical
