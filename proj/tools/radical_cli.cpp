// radical-asymptotics: iterate the radical maps, derive asymptotic series,
// estimate intrinsic constants and run the reproduction suite.
//
// Exit codes: 0 ok, 1 verification or computation failure, 2 usage error,
// 3 corrupt checkpoint data.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "radical/cli_args.hpp"
#include "radical/extract.hpp"
#include "radical/golden.hpp"
#include "radical/maps.hpp"
#include "radical/report.hpp"
#include "radical/series.hpp"
#include "radical/verify.hpp"

namespace {

using radical::HPReal;
using radical::MapId;
using radical::MapSpec;
using radical::PrecisionPolicy;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCorrupt = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string map;
  std::string n;
  std::string terms;
  int digits = 0;  // 0: subcommand default
  std::string order;
  std::string seed;
  std::string checkpoint;
  std::string checkpoint_every;
  std::string resume;
  std::string suite = "paper";
  std::string config;
  std::string out;
  bool json = false;
  bool deep = false;
};

// ---------------------------------------------------------------------------
// Output helpers

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}

  std::ostream& stream() { return buf_; }

  void flush() {
    if (path_.empty()) {
      std::cout << buf_.str();
      std::cout.flush();
      return;
    }
    std::ofstream f(path_);
    if (!f) throw UsageError("cannot write output file " + path_);
    f << buf_.str();
  }

 private:
  std::string path_;
  std::ostringstream buf_;
};

// Truncated digits with a trailing "…" unless the digits are exact.
std::string human(const HPReal& x, int digits) {
  const std::string s = radical::to_decimal(x, digits, radical::DecimalRounding::truncate);
  if (HPReal::parse(s, x.prec_bits()) == x) return s;
  return s + "…";
}

std::string short_sci(const HPReal& x) { return radical::to_decimal(x, 3); }

MapId require_map(const RunConfig& cfg) {
  if (cfg.map.empty()) throw UsageError("--map is required");
  return radical::parse_map_id(cfg.map);
}

int digits_or(const RunConfig& cfg, int fallback) {
  const int d = cfg.digits == 0 ? fallback : cfg.digits;
  if (d < 10) throw UsageError("--digits must be at least 10");
  if (d > 100000) throw UsageError("--digits is unreasonably large");
  return d;
}

MapSpec map_spec(const RunConfig& cfg, MapId id) {
  MapSpec spec = MapSpec::standard(id);
  if (!cfg.seed.empty()) spec = spec.with_seed(radical::cli::parse_seed(cfg.seed));
  return spec;
}

int truncation_for(const RunConfig& cfg, MapId id) {
  if (cfg.order.empty()) return radical::AnsatzSpec::default_truncation(id);
  return radical::cli::order_to_truncation(cfg.order);
}

// Checkpoint flags shared by iterate and estimate-c.
radical::IterateOptions checkpoint_options(const RunConfig& cfg, MapId id) {
  radical::IterateOptions opt;
  std::string save_path = cfg.checkpoint;
  std::string resume_path = cfg.resume;
  if (cfg.deep && save_path.empty()) {
    save_path = "radical-" + std::string(radical::to_string(id)) + ".ckpt";
  }
  if (cfg.deep && resume_path.empty() && !save_path.empty() &&
      std::filesystem::exists(save_path)) {
    resume_path = save_path;
  }
  if (!save_path.empty()) {
    opt.checkpoint_every = cfg.checkpoint_every.empty()
                               ? radical::kDefaultCheckpointEvery
                               : radical::cli::parse_count(cfg.checkpoint_every);
    if (opt.checkpoint_every == 0) throw UsageError("--checkpoint-every must be positive");
    opt.on_checkpoint = [save_path](const radical::Checkpoint& c) { c.save(save_path); };
  }
  if (!resume_path.empty()) {
    if (!std::filesystem::exists(resume_path)) {
      throw UsageError("checkpoint file " + resume_path + " does not exist");
    }
    radical::Checkpoint c = radical::Checkpoint::load(resume_path);
    if (c.map != id) {
      throw radical::CorruptCheckpointError("checkpoint " + resume_path + " is for map " +
                                            std::string(radical::to_string(c.map)));
    }
    opt.resume = std::move(c);
  }
  return opt;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_iterate(const RunConfig& cfg) {
  const MapId id = require_map(cfg);
  if (cfg.n.empty()) throw UsageError("--n is required");
  const std::uint64_t n = radical::cli::parse_count(cfg.n);
  if (n < 1) throw UsageError("--n must be at least 1");
  const int digits = digits_or(cfg, radical::extract::kDefaultDigits);
  const MapSpec spec = map_spec(cfg, id);
  const auto policy = PrecisionPolicy::for_iterations(digits, n);
  const HPReal x = radical::iterate(spec, n, policy, checkpoint_options(cfg, id));

  Output out(cfg.out);
  if (cfg.json) {
    const radical::report::IterateRecord rec{std::string(radical::to_string(id)), n, digits,
                                             policy.working_bits(),
                                             radical::to_decimal(x, digits)};
    out.stream() << json(rec).dump(2) << "\n";
  } else {
    out.stream() << radical::to_decimal(x, digits) << "\n";
  }
  out.flush();
  return kExitOk;
}

int cmd_paris(const RunConfig& cfg) {
  std::string terms_text = cfg.terms.empty() ? cfg.n : cfg.terms;
  if (terms_text.empty()) terms_text = "60";
  const std::uint64_t terms = radical::cli::parse_count(terms_text);
  if (terms < 2) throw UsageError("--terms must be at least 2");
  const int digits = digits_or(cfg, 30);
  const auto policy = PrecisionPolicy::for_iterations(digits, terms);
  const HPReal product = radical::golden::paris_product(terms, policy);
  const HPReal scaled = radical::golden::paris_scaled(terms, policy);
  const HPReal doubled = 2 * product;

  Output out(cfg.out);
  if (cfg.json) {
    const radical::report::ParisRecord rec{terms, digits, radical::to_decimal(product, digits),
                                           radical::to_decimal(scaled, digits),
                                           radical::to_decimal(doubled, digits)};
    out.stream() << json(rec).dump(2) << "\n";
  } else {
    out.stream() << "terms    " << terms << "\n"
                 << "product  " << human(product, digits) << "\n"
                 << "scaled   " << human(scaled, digits) << "\n"
                 << "limit    " << human(doubled, digits) << "\n";
  }
  out.flush();
  return kExitOk;
}

int cmd_derive_series(const RunConfig& cfg) {
  const MapId id = require_map(cfg);
  const int truncation = truncation_for(cfg, id);
  const auto ansatz = radical::AnsatzSpec::with_truncation(id, truncation);
  const auto table = radical::solve_coefficients(ansatz);

  std::vector<std::pair<std::string, int>> signs;
  if (id == MapId::add_inverse) {
    const auto root = radical::solve_coefficients(
        radical::AnsatzSpec::with_truncation(MapId::root_shift, truncation));
    signs = radical::coefficient_sign_pattern(table, root);
  }

  Output out(cfg.out);
  if (cfg.json) {
    json j = radical::report::table_to_json(ansatz, table);
    if (!signs.empty()) {
      json pattern = json::object();
      for (const auto& [name, s] : signs) pattern[name] = s;
      j["sign_vs_root_shift"] = pattern;
    }
    out.stream() << j.dump(2) << "\n";
  } else {
    auto& os = out.stream();
    os << "# " << radical::to_string(id) << ", truncation D = " << truncation
       << " (twice the power of 1/k)";
    if (table.beyond_paper) os << ", beyond the published order";
    os << "\n# leading terms:";
    for (const auto& f : ansatz.fixed) {
      os << "  [" << radical::to_string(f.coeff) << "] " << radical::to_string(f.m);
    }
    os << "\n";
    for (const auto& e : table.entries) {
      os << e.name << " = " << radical::to_string(e.value) << "\n";
    }
    if (!signs.empty()) {
      os << "# sign relative to root-shift:";
      for (const auto& [name, s] : signs) os << " " << name << (s > 0 ? "+" : s < 0 ? "-" : "?");
      os << "\n";
    }
  }
  out.flush();
  return kExitOk;
}

int cmd_estimate_c(const RunConfig& cfg) {
  const MapId id = require_map(cfg);
  const std::uint64_t n = cfg.n.empty() ? radical::extract::kDefaultDepth
                                        : radical::cli::parse_count(cfg.n);
  const int digits = digits_or(cfg, radical::extract::kDefaultDigits);
  const MapSpec spec = map_spec(cfg, id);
  const auto model = radical::extract::SeriesModel::build(id, truncation_for(cfg, id));
  const auto policy = PrecisionPolicy::for_iterations(digits, n);
  const auto est =
      radical::extract::estimate_c(spec, n, model, policy, checkpoint_options(cfg, id));
  std::vector<radical::extract::NamedValue> derived;
  if (id == MapId::quad_shift || id == MapId::root_shift) {
    derived = radical::extract::derived_checks(est);
  }

  Output out(cfg.out);
  if (cfg.json) {
    json j = radical::report::to_record(est, digits);
    if (!derived.empty()) {
      json arr = json::array();
      for (const auto& d : derived) {
        arr.push_back({{"name", d.name},
                       {"value", radical::to_decimal(d.value, digits)},
                       {"reference", d.reference}});
      }
      j["derived"] = arr;
    }
    out.stream() << j.dump(2) << "\n";
  } else {
    auto& os = out.stream();
    os << "map                " << radical::to_string(id) << "\n"
       << "n                  " << n << "\n"
       << "truncation         " << est.truncation << "\n"
       << "C                  " << human(est.value, digits) << "\n"
       << "modeled_error      " << short_sci(est.modeled_error)
       << "  (first omitted term; heuristic)\n"
       << "consistency_error  " << short_sci(est.consistency_error) << "  (vs N/10)\n";
    for (const auto& d : derived) {
      os << std::left << std::setw(19) << d.name << human(d.value, 20) << "  (quoted "
         << d.reference << ")\n";
    }
  }
  out.flush();
  return kExitOk;
}

int cmd_explore_double_radical(const RunConfig& cfg) {
  const std::uint64_t n = cfg.n.empty() ? 30 : radical::cli::parse_count(cfg.n);
  if (n < 1) throw UsageError("--n must be at least 1");
  const int digits = digits_or(cfg, 20);
  const auto rows =
      radical::golden::double_radical_table(n, PrecisionPolicy::for_iterations(digits, n));

  Output out(cfg.out);
  if (cfg.json) {
    out.stream() << radical::report::double_radical_rows_to_json(rows, digits).dump(2) << "\n";
  } else {
    auto& os = out.stream();
    os << "# x_1 = 1, x_k = sqrt(2 + 2 x_(k-1)) -> L = 1 + sqrt3\n"
       << "# n  L - x_n  ratio  L^n (L - x_n)\n";
    for (const auto& r : rows) {
      os << r.n << "  " << radical::to_decimal(r.limit_gap, 12) << "  "
         << (r.ratio ? radical::to_decimal(*r.ratio, 12) : std::string("-")) << "  "
         << human(r.scaled, digits) << "\n";
    }
  }
  out.flush();
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.suite != "paper") throw UsageError("unknown suite '" + cfg.suite + "' (expected paper)");
  const auto results = radical::verify::run_suite(radical::verify::workers_from_env());
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  Output out(cfg.out);
  if (cfg.json) {
    out.stream() << json{{"suite", cfg.suite}, {"passed", all}, {"fixtures", results}}.dump(2)
                 << "\n";
  } else {
    auto& os = out.stream();
    for (const auto& r : results) {
      os << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << std::setfill('0') << r.id
         << std::setfill(' ') << " " << r.name << " (" << std::fixed << std::setprecision(2)
         << r.seconds << " s)\n"
         << "       measured: " << r.measured << "\n"
         << "       expected: " << r.expected << "\n";
      if (!r.detail.empty()) os << "       detail:   " << r.detail << "\n";
    }
    os << (all ? "all fixtures passed" : "verification FAILED") << "\n";
  }
  out.flush();
  return all ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// Command-line wiring

struct Cli {
  CLI::App app{"Asymptotics of radical and related recurrences", "radical-asymptotics"};
  RunConfig cfg;
  std::vector<CLI::App*> subs;

  Cli() {
    app.require_subcommand(1);
    auto* iterate = add("iterate", "print x_n of a map");
    map_opt(iterate);
    n_opt(iterate, "iteration index n (scientific notation allowed)");
    digits_opt(iterate);
    seed_opt(iterate);
    checkpoint_opts(iterate);

    auto* paris = add("paris", "Paris constant from the golden-mean product");
    paris->add_option("--terms", cfg.terms, "last product index (default 60)");
    n_opt(paris, "alias for --terms");
    digits_opt(paris);

    auto* derive = add("derive-series", "solve the coefficient table of a divergent map");
    map_opt(derive);
    order_opt(derive);

    auto* estimate = add("estimate-c", "estimate the intrinsic constant C");
    map_opt(estimate);
    n_opt(estimate, "depth N (default 1e7)");
    digits_opt(estimate);
    order_opt(estimate);
    seed_opt(estimate);
    checkpoint_opts(estimate);
    estimate->add_flag("--deep", cfg.deep,
                       "checkpoint to radical-<map>.ckpt and resume from it when present");

    auto* explore = add("explore-double-radical", "gap table for x -> sqrt(2 + 2x)");
    n_opt(explore, "last index (default 30)");
    digits_opt(explore);

    auto* verify = add("verify", "run the reproduction suite");
    verify->add_option("--suite", cfg.suite, "suite name")->capture_default_str();
  }

  CLI::App* add(const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", cfg.json, "machine-readable JSON output");
    sub->add_option("--out", cfg.out, "write output to this file");
    sub->add_option("--config", cfg.config, "key=value file mirroring flags (flags win)");
    subs.push_back(sub);
    return sub;
  }
  void map_opt(CLI::App* s) { s->add_option("--map", cfg.map, "map id"); }
  void n_opt(CLI::App* s, const std::string& help) { s->add_option("--n", cfg.n, help); }
  void digits_opt(CLI::App* s) {
    s->add_option("--digits", cfg.digits, "significant decimal digits (>= 10)");
  }
  void order_opt(CLI::App* s) {
    s->add_option("--order", cfg.order, "series order as a power of 1/k (e.g. 4 or 2.5)");
  }
  void seed_opt(CLI::App* s) { s->add_option("--seed", cfg.seed, "exact starting value"); }
  void checkpoint_opts(CLI::App* s) {
    s->add_option("--checkpoint", cfg.checkpoint, "write checkpoints to this file");
    s->add_option("--checkpoint-every", cfg.checkpoint_every,
                  "steps between checkpoints (default 1e6)");
    s->add_option("--resume", cfg.resume, "resume from this checkpoint file");
  }

  CLI::App* chosen() const {
    for (auto* s : subs) {
      if (s->parsed()) return s;
    }
    return nullptr;
  }
};

int dispatch(const std::string& name, const RunConfig& cfg) {
  if (name == "iterate") return cmd_iterate(cfg);
  if (name == "paris") return cmd_paris(cfg);
  if (name == "derive-series") return cmd_derive_series(cfg);
  if (name == "estimate-c") return cmd_estimate_c(cfg);
  if (name == "explore-double-radical") return cmd_explore_double_radical(cfg);
  return cmd_verify(cfg);
}

// Re-parse with config entries inserted ahead of the user's flags for every
// option the user did not give explicitly.
std::vector<std::string> merged_args(const Cli& first, const std::vector<std::string>& args) {
  const CLI::App* sub = first.chosen();
  std::ifstream f(first.cfg.config);
  if (!f) throw UsageError("cannot read config file " + first.cfg.config);
  std::stringstream text;
  text << f.rdbuf();
  std::vector<std::string> extra;
  for (const auto& [key, value] : radical::cli::parse_config(text.str())) {
    if (key == "config") continue;
    const CLI::Option* opt = nullptr;
    try {
      opt = sub->get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
      throw UsageError("config key '" + key + "' is not an option of " + sub->get_name());
    }
    if (opt->count() > 0) continue;
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes") extra.push_back("--" + key);
    } else {
      extra.push_back("--" + key);
      extra.push_back(value);
    }
  }
  std::vector<std::string> merged = {sub->get_name()};
  merged.insert(merged.end(), extra.begin(), extra.end());
  // Everything after the subcommand name on the original command line.
  bool seen = false;
  for (const auto& a : args) {
    if (seen) merged.push_back(a);
    if (!seen && a == sub->get_name()) seen = true;
  }
  return merged;
}

int parse_into(Cli& cli, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  try {
    cli.app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = cli.app.exit(e);
    return code == 0 ? -1 : kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    Cli cli;
    if (int rc = parse_into(cli, args); rc != kExitOk) return rc < 0 ? kExitOk : rc;
    if (!cli.cfg.config.empty()) {
      const std::vector<std::string> merged = merged_args(cli, args);
      Cli again;
      if (int rc = parse_into(again, merged); rc != kExitOk) return rc < 0 ? kExitOk : rc;
      return dispatch(again.chosen()->get_name(), again.cfg);
    }
    return dispatch(cli.chosen()->get_name(), cli.cfg);
  } catch (const radical::CorruptCheckpointError& e) {
    std::cerr << "error: corrupt checkpoint: " << e.what() << "\n";
    return kExitCorrupt;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const radical::UnsupportedMapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const radical::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
