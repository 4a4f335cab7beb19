#include "radical/cli_args.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include <gmpxx.h>

namespace radical::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Exact value of a decimal mantissa with optional exponent, e.g. "-2.5e6".
Rat parse_decimal(std::string_view text, std::string_view what) {
  const std::string_view original = text;
  auto fail = [&] { return DomainError("invalid " + std::string(what) + ": '" +
                                       std::string(original) + "'"); };
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) {
      throw fail();
    }
    if (exponent > 4000 || exponent < -4000) throw fail();
    text = text.substr(0, e);
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw fail();
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) throw fail();
    digits = std::string(text);
  }
  mpq_class q(mpz_class(digits, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) {
    q *= scale;
  } else {
    q /= scale;
  }
  if (negative) q = -q;
  return Rat(q);
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  const Rat v = parse_decimal(text, "count");
  if (!v.is_integer() || v.sign() < 0 ||
      v.num() > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    throw DomainError("count must be a non-negative integer: '" + std::string(text) + "'");
  }
  return std::stoull(v.num().get_str());
}

Rat parse_seed(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.find('/') != std::string_view::npos) return Rat::parse(t);
  return parse_decimal(t, "seed");
}

int order_to_truncation(std::string_view order) {
  const Rat twice = parse_decimal(order, "order") * Rat(2);
  if (!twice.is_integer() || twice.sign() <= 0 || twice.num() > 1000) {
    throw DomainError("order must be a positive multiple of 1/2: '" + std::string(order) + "'");
  }
  return static_cast<int>(twice.num().get_si());
}

std::map<std::string, std::string> parse_config(std::string_view text) {
  std::map<std::string, std::string> out;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto c = line.find_first_of("#;"); c != std::string_view::npos) {
      line = line.substr(0, c);
    }
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) {
      throw DomainError("config line " + std::to_string(line_no) + ": empty key");
    }
    out[std::string(key)] = std::string(value);
  }
  return out;
}

}  // namespace radical::cli
