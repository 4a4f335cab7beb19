#include "radical/casring.hpp"

#include <algorithm>
#include <stdexcept>

namespace radical {

Rat::Rat(long num, long den) {
  if (den == 0) throw DomainError("Rat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw DomainError("cannot parse rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw DomainError("Rat: zero denominator");
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rat::to_string() const { return q_.get_str(10); }

HPReal Rat::to_hp(long prec_bits) const {
  HPReal r(prec_bits);
  mpfr_set_q(r.raw_mut(), q_.get_mpq_t(), MPFR_RNDN);
  return r;
}

int QSqrt2::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 2 b^2 wins.
  const Rat a2 = a_ * a_;
  const Rat b2 = Rat(2) * b_ * b_;
  return a2 > b2 ? sa : sb;
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt2)");
  const Rat n = norm();
  return {a_ / n, -b_ / n};
}

HPReal QSqrt2::to_hp(long prec_bits) const {
  HPReal r = a_.to_hp(prec_bits);
  if (!b_.is_zero()) r += b_.to_hp(prec_bits) * sqrt(HPReal(2, prec_bits));
  return r;
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  Rat a = a_ * o.a_ + Rat(2) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

CPoly::CPoly(QSqrt2 constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

CPoly::CPoly(std::vector<QSqrt2> coeffs) : c_(std::move(coeffs)) { trim(); }

CPoly CPoly::symbol() { return CPoly(std::vector<QSqrt2>{QSqrt2(0), QSqrt2(1)}); }

QSqrt2 CPoly::coeff(int n) const {
  if (n < 0 || n >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<size_t>(n)];
}

void CPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CPoly CPoly::derivative() const {
  std::vector<QSqrt2> d;
  for (size_t n = 1; n < c_.size(); ++n) d.push_back(c_[n] * QSqrt2(static_cast<long>(n)));
  return CPoly(std::move(d));
}

QSqrt2 CPoly::substitute(const QSqrt2& value) const {
  QSqrt2 acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
  trim();
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
  trim();
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QSqrt2> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return CPoly(std::move(out));
}

CPoly& CPoly::operator*=(const CPoly& o) {
  *this = *this * o;
  return *this;
}

CPoly& CPoly::operator*=(const QSqrt2& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

CPoly& CPoly::operator/=(const QSqrt2& s) {
  if (s.is_zero()) throw DomainError("CPoly division by zero scalar");
  return *this *= s.inverse();
}

CPoly CPoly::operator-() const {
  CPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

HPReal eval_cpoly(const CPoly& p, const HPReal& c, long prec_bits) {
  HPReal acc(prec_bits);
  const HPReal root2 = sqrt(HPReal(2, prec_bits));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= c;
    acc += it->rational_part().to_hp(prec_bits);
    if (!it->sqrt2_part().is_zero()) acc += it->sqrt2_part().to_hp(prec_bits) * root2;
  }
  return acc;
}

HPReal eval_cpoly(const CPoly& p, const HPReal& c) {
  return eval_cpoly(p, c, c.prec_bits());
}

void check_degree_cap(const CPoly& p, int cap, std::string_view what) {
  if (p.degree() > cap) {
    throw DomainError(std::string(what) + ": degree " + std::to_string(p.degree()) +
                      " in C exceeds cap " + std::to_string(cap));
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string power_str(int n) {
  return n == 1 ? "C" : "C^" + std::to_string(n);
}

std::string abs_str(const mpz_class& z) {
  return mpz_class(abs(z)).get_str();
}

// |r| * C^n in the rational grammar.
std::string rat_term(const Rat& r, int n) {
  const mpq_class m = abs(r.value());
  const bool unit = m == 1;
  const bool integral = m.get_den() == 1;
  const std::string num = m.get_num().get_str();
  if (n == 0) return integral ? num : num + "/" + m.get_den().get_str();
  if (unit) return power_str(n);
  if (integral) return num + "*" + power_str(n);
  return "(" + num + "/" + m.get_den().get_str() + ")*" + power_str(n);
}

// Integer-coefficient term A + B*sqrt2 times C^n. Returns the sign used for
// joining (+1/-1) and the magnitude text.
std::pair<int, std::string> int_term(const mpz_class& a, const mpz_class& b, int n) {
  const std::string pw = n == 0 ? "" : power_str(n);
  auto attach = [&](const std::string& scalar, bool is_one) {
    if (pw.empty()) return scalar;
    return is_one ? pw : scalar + "*" + pw;
  };
  if (b == 0) {
    return {sgn(a), attach(abs_str(a), abs(a) == 1)};
  }
  if (a == 0) {
    const std::string s = abs(b) == 1 ? "sqrt2" : abs_str(b) + "*sqrt2";
    return {sgn(b), pw.empty() ? s : s + "*" + pw};
  }
  std::string inner = a.get_str() + (sgn(b) < 0 ? " - " : " + ") +
                      (abs(b) == 1 ? "sqrt2" : abs_str(b) + "*sqrt2");
  return {1, pw.empty() ? "(" + inner + ")" : "(" + inner + ")*" + pw};
}

std::string join_terms(const std::vector<std::pair<int, std::string>>& terms) {
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    const auto& [s, txt] = terms[i];
    if (i == 0) {
      out = (s < 0 ? "-" : "") + txt;
    } else {
      out += (s < 0 ? " - " : " + ") + txt;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Rat& r) { return r.to_string(); }

std::string to_string(const QSqrt2& q) { return to_string(CPoly(q)); }

std::string to_string(const CPoly& p) {
  if (p.is_zero()) return "0";
  const bool negate = p.leading().sign() < 0;
  const CPoly body = negate ? -p : p;
  const auto& cs = body.coeffs();
  const bool rational = std::all_of(cs.begin(), cs.end(),
                                    [](const QSqrt2& q) { return q.is_rational(); });
  std::vector<std::pair<int, std::string>> terms;

  if (rational) {
    for (int n = body.degree(); n >= 0; --n) {
      const Rat& r = cs[static_cast<size_t>(n)].rational_part();
      if (r.is_zero()) continue;
      terms.emplace_back(r.sign(), rat_term(r, n));
    }
    const std::string joined = join_terms(terms);
    if (!negate) return joined;
    return terms.size() > 1 ? "-(" + joined + ")" : "-" + joined;
  }

  mpz_class lcm_den = 1;
  for (const auto& q : cs) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.rational_part().den().get_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.sqrt2_part().den().get_mpz_t());
  }
  for (int n = body.degree(); n >= 0; --n) {
    const QSqrt2& q = cs[static_cast<size_t>(n)];
    if (q.is_zero()) continue;
    const mpq_class a = q.rational_part().value() * lcm_den;
    const mpq_class b = q.sqrt2_part().value() * lcm_den;
    terms.push_back(int_term(a.get_num(), b.get_num(), n));
  }
  std::string joined = join_terms(terms);
  const bool has_den = lcm_den != 1;
  if (terms.size() > 1 && (has_den || negate)) joined = "(" + joined + ")";
  if (has_den) joined += "/" + lcm_den.get_str();
  return negate ? "-" + joined : joined;
}

}  // namespace radical
