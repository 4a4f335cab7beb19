#pragma once

// Exact coefficient arithmetic: big rationals, the field Q(sqrt2), and
// polynomials over Q(sqrt2) in the single formal symbol C.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radical/hpnum.hpp"

namespace radical {

/// Reduced fraction with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// "p", "-p/q" or a plain integer string.
  static Rat parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  std::string to_string() const;
  HPReal to_hp(long prec_bits) const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

/// a + b*sqrt2 with a, b rational. The representation is unique.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
  QSqrt2(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {Rat(0), Rat(1)}; }

  const Rat& rational_part() const { return a_; }
  const Rat& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  /// Sign of the real number a + b*sqrt2, decided exactly.
  int sign() const;
  /// a^2 - 2 b^2; nonzero for every nonzero element.
  Rat norm() const { return a_ * a_ - Rat(2) * b_ * b_; }
  QSqrt2 conjugate() const { return {a_, -b_}; }
  /// Throws DomainError for zero.
  QSqrt2 inverse() const;

  HPReal to_hp(long prec_bits) const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }
  QSqrt2 operator-() const { return {-a_, -b_}; }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rat a_;
  Rat b_;
};

/// Polynomial in the symbol C with Q(sqrt2) coefficients; coeffs()[n] is the
/// coefficient of C^n. No trailing zeros are stored, so zero has no coeffs.
class CPoly {
 public:
  CPoly() = default;
  CPoly(QSqrt2 constant);  // NOLINT(google-explicit-constructor)
  CPoly(long constant) : CPoly(QSqrt2(constant)) {}  // NOLINT
  explicit CPoly(std::vector<QSqrt2> coeffs);

  /// The polynomial "C".
  static CPoly symbol();

  const std::vector<QSqrt2>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  QSqrt2 coeff(int n) const;
  QSqrt2 leading() const { return c_.empty() ? QSqrt2{} : c_.back(); }

  /// Formal derivative with respect to C.
  CPoly derivative() const;
  /// Exact substitution C := value.
  QSqrt2 substitute(const QSqrt2& value) const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o);
  CPoly& operator*=(const QSqrt2& s);
  /// Throws DomainError when s is zero.
  CPoly& operator/=(const QSqrt2& s);
  CPoly operator-() const;

  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(CPoly a, const QSqrt2& s) { return a *= s; }
  friend CPoly operator*(const QSqrt2& s, CPoly a) { return a *= s; }
  friend CPoly operator/(CPoly a, const QSqrt2& s) { return a /= s; }
  friend bool operator==(const CPoly& a, const CPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<QSqrt2> c_;
};

/// Numeric evaluation by Horner's rule, sqrt2 taken at prec_bits.
HPReal eval_cpoly(const CPoly& p, const HPReal& c, long prec_bits);
HPReal eval_cpoly(const CPoly& p, const HPReal& c);

/// Throws DomainError if p.degree() exceeds cap.
void check_degree_cap(const CPoly& p, int cap, std::string_view what);

// Pretty printing.
//
// Grammar (whitespace as shown):
//   expr    := "0" | ["-"] body
//   body    := ratsum | "(" intsum ")" "/" L | intsum "/" L | intsum
//   ratsum  := term { (" + " | " - ") term }           rational coefficients
//   term    := ratcoef "*" power | power | ratcoef
//   ratcoef := integer | "(" p "/" q ")"   (bare "p/q" for the constant term)
//   power   := "C" | "C^" n
//   intsum  := iterm { (" + " | " - ") iterm }          after clearing L
//   iterm   := scalar ["*" power] | power
//   scalar  := integer | "sqrt2" | integer "*sqrt2" | "(" a " + " b "*sqrt2)"
//
// Polynomials whose coefficients are all rational use `ratsum`; any sqrt2
// component switches to the common-denominator form with L the lcm of all
// denominators. A leading "-" factors the sign out of the highest-degree
// coefficient when it is negative (with parentheses when more than one term
// remains), so -(C/4 - 1/16) prints as "-((1/4)*C - 1/16)" and
// -(4C - sqrt2)/32 prints as "-(4*C - sqrt2)/32".
std::string to_string(const Rat& r);
std::string to_string(const QSqrt2& q);
std::string to_string(const CPoly& p);

}  // namespace radical
