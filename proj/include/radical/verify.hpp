#pragma once

// The reproduction suite behind `radical-asymptotics verify --suite paper`:
// twelve fixtures, each comparing a measured quantity against a published
// value at a pinned tolerance and runtime budget.

#include <string>
#include <vector>

#include "radical/report.hpp"

namespace radical::verify {

inline constexpr int kFixtureCount = 12;
inline constexpr const char* kWorkersEnv = "RADICAL_ASYMPTOTICS_WORKERS";

/// Fixture title by id (1-based). Throws std::out_of_range.
std::string fixture_name(int id);

/// Runs one fixture; exceptions are reported as failures, not thrown.
report::FixtureRecord run_fixture(int id);

/// Parallelism cap: the environment variable if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
unsigned workers_from_env();

/// All fixtures on up to `workers` threads. Results are ordered by id.
std::vector<report::FixtureRecord> run_suite(unsigned workers);

}  // namespace radical::verify
