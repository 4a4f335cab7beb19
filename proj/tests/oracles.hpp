#pragma once

// Independent reference computations for the tests. They use only integer
// arithmetic (GMP mpz), never the floating-point layer under test.

#include <gmpxx.h>

#include <string>

namespace oracle {

// sqrt(n) to `digits` decimal places, truncated, by the schoolbook
// digit-pair long-division method.
inline std::string sqrt_digits(unsigned n, int digits) {
  std::string groups = std::to_string(n);
  if (groups.size() % 2) groups.insert(groups.begin(), '0');
  const size_t int_pairs = groups.size() / 2;
  groups.append(static_cast<size_t>(2 * digits), '0');

  mpz_class remainder = 0;
  mpz_class root = 0;
  std::string out;
  for (size_t i = 0; i < groups.size(); i += 2) {
    if (i / 2 == int_pairs) out += '.';
    remainder = remainder * 100 + std::stoi(groups.substr(i, 2));
    int x = 9;
    while ((20 * root + x) * x > remainder) --x;
    remainder -= (20 * root + x) * x;
    root = root * 10 + x;
    if (!(out.empty() && x == 0 && i / 2 + 1 < int_pairs)) out += static_cast<char>('0' + x);
  }
  return out;
}

// arctan(1/x) * 10^scale, truncated, by its alternating Taylor series.
inline mpz_class arctan_inv(long x, const mpz_class& unity) {
  mpz_class sum = 0;
  mpz_class power = unity / x;
  const long x2 = x * x;
  for (long k = 0; power != 0; ++k) {
    const mpz_class term = power / (2 * k + 1);
    if (k % 2) sum -= term; else sum += term;
    power /= x2;
  }
  return sum;
}

// pi to `digits` decimal places, truncated, by Machin's formula
// pi = 16 arctan(1/5) - 4 arctan(1/239).
inline std::string pi_digits(int digits) {
  const int guard = 10;
  mpz_class unity;
  mpz_ui_pow_ui(unity.get_mpz_t(), 10, static_cast<unsigned long>(digits + guard));
  mpz_class pi = 16 * arctan_inv(5, unity) - 4 * arctan_inv(239, unity);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, guard);
  pi /= scale;
  std::string s = pi.get_str();
  return s.substr(0, 1) + "." + s.substr(1);
}

}  // namespace oracle
