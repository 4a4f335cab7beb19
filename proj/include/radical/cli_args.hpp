#pragma once

// Argument parsing shared by the command-line tool and its tests.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "radical/casring.hpp"
#include "radical/maps.hpp"

namespace radical::cli {

/// Non-negative integer count, accepting scientific notation whose value is
/// an exact integer: "10000000", "1e7", "2.5e6". Throws DomainError.
std::uint64_t parse_count(std::string_view text);

/// Exact seed: integer, "p/q" or terminating decimal ("0.25"). Throws
/// DomainError.
Rat parse_seed(std::string_view text);

/// Series order given as a power of 1/k (4 -> D = 8, 2.5 -> D = 5).
/// Throws DomainError unless 2 * order is an integer.
int order_to_truncation(std::string_view order);

/// Lines of `key = value`; '#' and ';' start comments, blank lines are
/// skipped, and "[section]" headers are ignored. Throws DomainError on a
/// line without '='.
std::map<std::string, std::string> parse_config(std::string_view text);

}  // namespace radical::cli
