#include "radical/series.hpp"

#include <algorithm>
#include <cstdlib>

namespace radical {

std::string to_string(const Monomial& m) {
  std::string k;
  if (m.d == 0) {
    k = "1";
  } else if (m.d % 2 == 0) {
    k = "k^" + std::to_string(-m.d / 2);
  } else {
    k = "k^(" + std::to_string(-m.d) + "/2)";
  }
  if (m.j == 0) return k;
  const std::string lg = m.j == 1 ? "ln(k)" : "ln(k)^" + std::to_string(m.j);
  return m.d == 0 ? lg : lg + "*" + k;
}

// ---------------------------------------------------------------------------
// LogPowSeries

LogPowSeries LogPowSeries::constant(const CPoly& c, int order) {
  return monomial({0, 0}, c, order);
}

LogPowSeries LogPowSeries::monomial(Monomial m, const CPoly& c, int order) {
  LogPowSeries s(order);
  s.add_term(m, c);
  return s;
}

CPoly LogPowSeries::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CPoly{} : it->second;
}

int LogPowSeries::min_d() const {
  if (terms_.empty()) throw SeriesError("min_d of the zero series");
  return terms_.begin()->first.d;
}

void LogPowSeries::add_term(Monomial m, const CPoly& c) {
  if (m.j < 0) throw SeriesError("negative log power");
  if (c.is_zero()) return;
  if (m.d > order_) {
    overflowed_ = true;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LogPowSeries LogPowSeries::truncated(int order) const {
  LogPowSeries s(order);
  for (const auto& [m, c] : terms_) {
    if (m.d > order) break;
    s.terms_.emplace(m, c);
  }
  return s;
}

bool LogPowSeries::log_powers_bounded(int d_min) const {
  return std::all_of(terms_.begin(), terms_.end(), [d_min](const auto& t) {
    return 2 * t.first.j <= (t.first.d - d_min) + 8;
  });
}

LogPowSeries& LogPowSeries::operator+=(const LogPowSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  overflowed_ = overflowed_ || o.overflowed_;
  return *this;
}

LogPowSeries& LogPowSeries::operator-=(const LogPowSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  overflowed_ = overflowed_ || o.overflowed_;
  return *this;
}

LogPowSeries& LogPowSeries::operator*=(const CPoly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

LogPowSeries LogPowSeries::operator-() const {
  LogPowSeries r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

// ---------------------------------------------------------------------------
// Series operations

namespace {

// Coefficients of ln(1 + 1/k)^i in powers of 1/k, for i = 0..max_pow,
// each through 1/k^max_n.
std::vector<std::vector<Rat>> log1p_powers(int max_pow, int max_n) {
  std::vector<std::vector<Rat>> out(static_cast<size_t>(max_pow) + 1,
                                    std::vector<Rat>(static_cast<size_t>(max_n) + 1));
  out[0][0] = Rat(1);
  if (max_pow == 0) return out;
  std::vector<Rat> base(static_cast<size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) base[static_cast<size_t>(n)] = Rat(n % 2 == 1 ? 1 : -1, n);
  for (int i = 1; i <= max_pow; ++i) {
    auto& cur = out[static_cast<size_t>(i)];
    const auto& prev = out[static_cast<size_t>(i - 1)];
    for (int a = 0; a <= max_n; ++a) {
      if (prev[static_cast<size_t>(a)].is_zero()) continue;
      for (int b = 1; a + b <= max_n; ++b) {
        cur[static_cast<size_t>(a + b)] += prev[static_cast<size_t>(a)] * base[static_cast<size_t>(b)];
      }
    }
  }
  return out;
}

Rat binomial_int(int n, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
  return r;
}

}  // namespace

LogPowSeries shift_expand(const LogPowSeries& s, int D) {
  LogPowSeries out(D);
  if (s.is_zero()) return out;
  const int d_min = s.min_d();
  const int max_n = std::max(0, (D - d_min) / 2);
  int max_j = 0;
  for (const auto& [m, c] : s.terms()) max_j = std::max(max_j, m.j);
  const auto lpow = log1p_powers(max_j, max_n);

  for (const auto& [m, c] : s.terms()) {
    if (m.d > D) {
      out.add_term(m, c);  // records the overflow
      continue;
    }
    const int steps = (D - m.d) / 2;  // powers of 1/k still representable
    // (1 + 1/k)^(-d/2) = sum_m binom(-d/2, m) k^-m
    const Rat e(-m.d, 2);
    std::vector<Rat> binom(static_cast<size_t>(steps) + 1);
    binom[0] = Rat(1);
    for (int t = 1; t <= steps; ++t) {
      binom[static_cast<size_t>(t)] = binom[static_cast<size_t>(t - 1)] * (e - Rat(t - 1)) / Rat(t);
    }
    // Rational multiplier for each (power of 1/k, remaining log power).
    std::map<std::pair<int, int>, Rat> acc;
    for (int i = 0; i <= m.j; ++i) {
      const Rat bj = binomial_int(m.j, i);
      const auto& li = lpow[static_cast<size_t>(i)];
      for (int n = i; n <= steps; ++n) {
        if (li[static_cast<size_t>(n)].is_zero()) continue;
        for (int t = 0; t + n <= steps; ++t) {
          if (binom[static_cast<size_t>(t)].is_zero()) continue;
          acc[{t + n, m.j - i}] += bj * binom[static_cast<size_t>(t)] * li[static_cast<size_t>(n)];
        }
      }
    }
    for (const auto& [key, r] : acc) {
      if (r.is_zero()) continue;
      out.add_term({m.d + 2 * key.first, key.second}, c * QSqrt2(r));
    }
  }
  return out;
}

LogPowSeries mul(const LogPowSeries& a, const LogPowSeries& b, int D) {
  LogPowSeries out(D);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.d + mb.d > D) break;  // b is sorted by d
      out.add_term({ma.d + mb.d, ma.j + mb.j}, ca * cb);
    }
  }
  return out;
}

LogPowSeries square(const LogPowSeries& a, int D) {
  LogPowSeries out(D);
  const auto& t = a.terms();
  for (auto i = t.begin(); i != t.end(); ++i) {
    if (2 * i->first.d <= D) {
      out.add_term({2 * i->first.d, 2 * i->first.j}, i->second * i->second);
    }
    for (auto j = std::next(i); j != t.end(); ++j) {
      if (i->first.d + j->first.d > D) break;
      out.add_term({i->first.d + j->first.d, i->first.j + j->first.j},
                   (i->second * j->second) * QSqrt2(2));
    }
  }
  return out;
}

LogPowSeries reciprocal(const LogPowSeries& a, int D) {
  if (a.is_zero()) throw SeriesError("reciprocal of the zero series");
  const auto& [lead, lead_c] = *a.terms().begin();
  if (lead.j != 0) throw SeriesError("reciprocal: leading term carries a logarithm");
  for (const auto& [m, c] : a.terms()) {
    if (m.d == lead.d && m.j != lead.j) {
      throw SeriesError("reciprocal: leading order is not a single monomial");
    }
  }
  if (!lead_c.is_constant()) {
    throw SeriesError("reciprocal: leading coefficient depends on C");
  }
  const QSqrt2 inv = lead_c.coeff(0).inverse();

  // a = lead * (1 + eps); relative orders of eps are >= 1.
  const int rel = D + lead.d;
  LogPowSeries out(D);
  if (rel < 0) return out;
  LogPowSeries eps(rel);
  for (const auto& [m, c] : a.terms()) {
    if (m == lead) continue;
    if (m.d - lead.d > rel) break;
    eps.add_term({m.d - lead.d, m.j}, c * inv);
  }
  const LogPowSeries neg_eps = -eps;
  LogPowSeries sum = LogPowSeries::constant(CPoly(1), rel);
  LogPowSeries power = sum;
  for (int n = 1; n <= rel && !neg_eps.is_zero(); ++n) {
    power = mul(power, neg_eps, rel);
    if (power.is_zero()) break;
    sum += power;
  }
  for (const auto& [m, c] : sum.terms()) {
    out.add_term({m.d - lead.d, m.j}, c * inv);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ansatz

namespace {

bool half_integer_lattice(MapId map) {
  return map == MapId::root_shift || map == MapId::add_inverse;
}

void require_series_map(MapId map) {
  if (!has_implicit_form(map)) {
    throw UnsupportedMapError("map " + std::string(to_string(map)) +
                              " has no asymptotic series");
  }
}

}  // namespace

int AnsatzSpec::default_truncation(MapId map) {
  require_series_map(map);
  return half_integer_lattice(map) ? 5 : 8;
}

AnsatzSpec AnsatzSpec::standard(MapId map) {
  return with_truncation(map, default_truncation(map));
}

AnsatzSpec AnsatzSpec::with_truncation(MapId map, int truncation) {
  require_series_map(map);
  AnsatzSpec a;
  a.map = map;
  a.truncation = truncation;
  const CPoly c = CPoly::symbol();
  const bool half = half_integer_lattice(map);
  const int first = half ? 3 : 2;
  if (truncation < first || truncation > 24) {
    throw DomainError("truncation " + std::to_string(truncation) + " outside [" +
                      std::to_string(first) + ", 24] for " + std::string(to_string(map)));
  }
  const QSqrt2 root2 = QSqrt2::sqrt2();
  switch (map) {
    case MapId::quad_shift:
      a.fixed = {{{-2, 0}, CPoly(QSqrt2(Rat(1, 2)))},
                 {{0, 1}, CPoly(QSqrt2(Rat(1, 4)))},
                 {{0, 0}, c}};
      break;
    case MapId::product_radical:
      a.fixed = {{{-2, 0}, CPoly(QSqrt2(Rat(1, 2)))},
                 {{0, 1}, CPoly(QSqrt2(Rat(-1, 4)))},
                 {{0, 0}, -c}};
      break;
    case MapId::root_shift:
      // sqrt(2k) - ln(k)/(4 sqrt2 k^(1/2)) - C/k^(1/2)
      a.fixed = {{{-1, 0}, CPoly(root2)},
                 {{1, 1}, CPoly(QSqrt2(Rat(0), Rat(-1, 8)))},
                 {{1, 0}, -c}};
      break;
    case MapId::add_inverse:
      // sqrt(2k) + ln(k)/(4 sqrt2 k^(1/2)) + C/k^(1/2)
      a.fixed = {{{-1, 0}, CPoly(root2)},
                 {{1, 1}, CPoly(QSqrt2(Rat(0), Rat(1, 8)))},
                 {{1, 0}, c}};
      break;
    default:
      break;
  }
  static constexpr char kLetters[] = "pqrstuvwxyz";
  int level = 0;
  for (int d = first; d <= truncation; d += 2, ++level) {
    const int top_j = half ? (d + 1) / 2 : d / 2;
    for (int j = top_j; j >= 0; --j) {
      a.slots.push_back({std::string(1, kLetters[level]) + std::to_string(j), {d, j}});
    }
  }
  a.match_order = half ? truncation + 2 : truncation;
  return a;
}

int AnsatzSpec::lead_d() const {
  int d = fixed.empty() ? 0 : fixed.front().m.d;
  for (const auto& f : fixed) d = std::min(d, f.m.d);
  return d;
}

const SlotSpec& AnsatzSpec::slot(const std::string& name) const {
  for (const auto& s : slots) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("no slot named " + name);
}

LogPowSeries AnsatzSpec::build(const SlotValues& values, int order) const {
  LogPowSeries s(order);
  for (const auto& f : fixed) s.add_term(f.m, f.coeff);
  for (const auto& sl : slots) {
    if (auto it = values.find(sl.name); it != values.end()) s.add_term(sl.m, it->second);
  }
  return s;
}

FunctionalSides functional_sides(const AnsatzSpec& ansatz, const SlotValues& values) {
  const int E = ansatz.match_order;
  const int W = E + 2;
  const LogPowSeries x0 = ansatz.build(values, W);
  const LogPowSeries x1 = shift_expand(x0, W);
  switch (ansatz.map) {
    case MapId::quad_shift:
      return {square(x1, E) - x1.truncated(E), square(x0, E)};
    case MapId::product_radical:
      return {square(x1, E), square(x0, E) + x0.truncated(E)};
    case MapId::root_shift:
      return {x1.truncated(E) - reciprocal(x1, E), x0.truncated(E)};
    case MapId::add_inverse:
      return {x1.truncated(E), x0.truncated(E) + reciprocal(x0, E)};
    default:
      throw UnsupportedMapError("map " + std::string(to_string(ansatz.map)) +
                                " has no implicit form");
  }
}

// ---------------------------------------------------------------------------
// Symbolic view by probing

namespace {

// Distinct generic rationals used to confirm probe-derived forms.
CPoly generic_value(size_t i) {
  return CPoly(QSqrt2(Rat(static_cast<long>(3 * i + 2), static_cast<long>(2 * i + 7))));
}

std::map<Monomial, SlotForm> assemble_forms(
    const std::vector<std::string>& names, const LogPowSeries& base,
    const std::vector<LogPowSeries>& one, const std::vector<LogPowSeries>& two,
    const std::map<std::pair<size_t, size_t>, LogPowSeries>& pairs) {
  std::map<Monomial, SlotForm> out;
  auto touch = [&](const LogPowSeries& s) {
    for (const auto& [m, c] : s.terms()) out[m];
  };
  touch(base);
  for (const auto& s : one) touch(s);
  for (const auto& s : two) touch(s);
  for (const auto& [k, s] : pairs) touch(s);

  for (auto& [m, form] : out) {
    const CPoly b = base.coeff(m);
    form.constant = b;
    std::vector<CPoly> lin(names.size());
    std::vector<CPoly> sq(names.size());
    for (size_t i = 0; i < names.size(); ++i) {
      const CPoly f1 = one[i].coeff(m);
      const CPoly f2 = two[i].coeff(m);
      sq[i] = (f2 - f1 * QSqrt2(2) + b) / QSqrt2(2);
      lin[i] = f1 - b - sq[i];
      if (!lin[i].is_zero()) form.linear[names[i]] = lin[i];
      if (!sq[i].is_zero()) form.quadratic[{names[i], names[i]}] = sq[i];
    }
    for (const auto& [key, s] : pairs) {
      const auto [i, j] = key;
      const CPoly cross = s.coeff(m) - one[i].coeff(m) - one[j].coeff(m) + b;
      if (!cross.is_zero()) form.quadratic[{names[i], names[j]}] = cross;
    }
  }
  return out;
}

CPoly evaluate_form(const SlotForm& f, const SlotValues& v) {
  CPoly acc = f.constant;
  for (const auto& [n, c] : f.linear) acc += c * v.at(n);
  for (const auto& [k, c] : f.quadratic) acc += c * v.at(k.first) * v.at(k.second);
  return acc;
}

}  // namespace

SymbolicSides functional_sides_symbolic(const AnsatzSpec& ansatz) {
  std::vector<std::string> names;
  for (const auto& s : ansatz.slots) names.push_back(s.name);
  const size_t n = names.size();

  auto probe = [&](const SlotValues& v) { return functional_sides(ansatz, v); };
  const FunctionalSides base = probe({});
  std::vector<LogPowSeries> one_l, one_r, two_l, two_r;
  for (size_t i = 0; i < n; ++i) {
    auto s1 = probe({{names[i], CPoly(1)}});
    auto s2 = probe({{names[i], CPoly(2)}});
    one_l.push_back(std::move(s1.lhs));
    one_r.push_back(std::move(s1.rhs));
    two_l.push_back(std::move(s2.lhs));
    two_r.push_back(std::move(s2.rhs));
  }
  std::map<std::pair<size_t, size_t>, LogPowSeries> pair_l, pair_r;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      auto s = probe({{names[i], CPoly(1)}, {names[j], CPoly(1)}});
      pair_l.emplace(std::make_pair(i, j), std::move(s.lhs));
      pair_r.emplace(std::make_pair(i, j), std::move(s.rhs));
    }
  }
  SymbolicSides out{assemble_forms(names, base.lhs, one_l, two_l, pair_l),
                    assemble_forms(names, base.rhs, one_r, two_r, pair_r)};

  SlotValues generic;
  for (size_t i = 0; i < n; ++i) generic[names[i]] = generic_value(i);
  const FunctionalSides check = probe(generic);
  auto confirm = [&](const std::map<Monomial, SlotForm>& forms, const LogPowSeries& s) {
    for (const auto& [m, c] : s.terms()) {
      auto it = forms.find(m);
      if (it == forms.end() || evaluate_form(it->second, generic) != c) {
        throw SeriesError("coefficient of " + to_string(m) +
                          " is not quadratic in the slots");
      }
    }
    for (const auto& [m, f] : forms) {
      if (s.coeff(m) != evaluate_form(f, generic)) {
        throw SeriesError("coefficient of " + to_string(m) +
                          " is not quadratic in the slots");
      }
    }
  };
  confirm(out.lhs, check.lhs);
  confirm(out.rhs, check.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Solver

const CPoly& CoeffTable::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e.value;
  }
  throw std::out_of_range("no coefficient named " + name);
}

SlotValues CoeffTable::values() const {
  SlotValues v;
  for (const auto& e : entries) v[e.name] = e.value;
  return v;
}

namespace {

LogPowSeries residual(const AnsatzSpec& ansatz, const SlotValues& values) {
  FunctionalSides s = functional_sides(ansatz, values);
  return s.lhs - s.rhs;
}

}  // namespace

CoeffTable solve_coefficients(const AnsatzSpec& ansatz) {
  SlotValues known;
  std::vector<const SlotSpec*> open;
  for (const auto& s : ansatz.slots) open.push_back(&s);

  while (!open.empty()) {
    const LogPowSeries r0 = residual(ansatz, known);
    std::vector<LogPowSeries> r1, r2;
    SlotValues generic = known;
    for (size_t i = 0; i < open.size(); ++i) {
      SlotValues v = known;
      v[open[i]->name] = CPoly(1);
      r1.push_back(residual(ansatz, v));
      v[open[i]->name] = CPoly(2);
      r2.push_back(residual(ansatz, v));
      generic[open[i]->name] = generic_value(i);
    }
    const LogPowSeries rg = residual(ansatz, generic);

    std::map<Monomial, bool> support;
    for (const auto& [m, c] : r0.terms()) support[m] = true;
    for (const auto& s : r1) for (const auto& [m, c] : s.terms()) support[m] = true;
    for (const auto& s : r2) for (const auto& [m, c] : s.terms()) support[m] = true;

    std::map<std::string, CPoly> solved;
    for (const auto& [m, unused] : support) {
      if (m.d > ansatz.match_order) break;
      const CPoly b = r0.coeff(m);
      std::optional<size_t> dep;
      bool multiple = false;
      for (size_t i = 0; i < open.size(); ++i) {
        if (r1[i].coeff(m) != b || r2[i].coeff(m) != b) {
          if (dep) multiple = true;
          dep = i;
        }
      }
      if (!dep || multiple) continue;
      const size_t i = *dep;
      const CPoly slope = r1[i].coeff(m) - b;
      const CPoly curvature = r2[i].coeff(m) - r1[i].coeff(m) * QSqrt2(2) + b;
      if (!curvature.is_zero() || slope.is_zero() || !slope.is_constant()) continue;
      // Cross terms with other open slots would show up here.
      if (rg.coeff(m) != b + slope * generic_value(i)) continue;
      const std::string& name = open[i]->name;
      if (solved.count(name)) continue;
      solved[name] = -b / slope.coeff(0);
    }
    if (solved.empty()) {
      std::string names;
      for (const auto* s : open) names += " " + s->name;
      throw SeriesError("no matching equation is affine in exactly one of the open slots:" +
                        names);
    }
    for (auto& [name, value] : solved) known[name] = std::move(value);
    std::erase_if(open, [&](const SlotSpec* s) { return solved.count(s->name) > 0; });
  }

  const LogPowSeries r = residual(ansatz, known);
  if (!r.truncated(ansatz.match_order).is_zero()) {
    const auto& [m, c] = *r.terms().begin();
    throw SeriesError("nonzero residual after solving, first at " + to_string(m) + ": " +
                      to_string(c));
  }
  const auto sides = functional_sides(ansatz, known);
  const int lead = ansatz.lead_d();
  if (!sides.lhs.log_powers_bounded(lead) || !sides.rhs.log_powers_bounded(lead)) {
    throw SeriesError("log powers exceed the ansatz bound");
  }

  CoeffTable table;
  table.map = ansatz.map;
  table.truncation = ansatz.truncation;
  table.beyond_paper = ansatz.beyond_paper();
  const int cap = std::max(4, (ansatz.truncation + 1) / 2);
  for (const auto& s : ansatz.slots) {
    const CPoly& v = known.at(s.name);
    check_degree_cap(v, cap, s.name);
    table.entries.push_back({s.name, s.m, v});
  }
  return table;
}

std::vector<std::pair<std::string, int>> coefficient_sign_pattern(const CoeffTable& a,
                                                                   const CoeffTable& b) {
  std::vector<std::pair<std::string, int>> out;
  const size_t n = std::min(a.entries.size(), b.entries.size());
  for (size_t i = 0; i < n; ++i) {
    const CPoly& x = a.entries[i].value;
    const CPoly& y = b.entries[i].value;
    int s = 0;
    if (x == y) {
      s = 1;
    } else if (x == -y) {
      s = -1;
    }
    out.emplace_back(a.entries[i].name, s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Numeric evaluation

std::vector<HPReal> series_in_c(const AnsatzSpec& ansatz, const CoeffTable& table,
                                std::uint64_t k, long prec_bits, std::optional<int> max_d) {
  if (k < 2) throw DomainError("series evaluation requires k >= 2");
  const HPReal kk = Rat(static_cast<long>(k)).to_hp(prec_bits);
  const HPReal sk = sqrt(kk);
  const HPReal lk = ln(kk);
  const HPReal root2 = sqrt(HPReal(2, prec_bits));
  std::vector<HPReal> out;
  auto add = [&](Monomial m, const CPoly& p) {
    if (max_d && m.d > *max_d) return;
    const HPReal scale = pow(sk, -m.d) * pow(lk, m.j);
    for (int n = 0; n <= p.degree(); ++n) {
      while (static_cast<int>(out.size()) <= n) out.emplace_back(prec_bits);
      const QSqrt2& q = p.coeffs()[static_cast<size_t>(n)];
      HPReal v = q.rational_part().to_hp(prec_bits);
      if (!q.sqrt2_part().is_zero()) v += q.sqrt2_part().to_hp(prec_bits) * root2;
      out[static_cast<size_t>(n)] += v * scale;
    }
  };
  for (const auto& f : ansatz.fixed) add(f.m, f.coeff);
  for (const auto& e : table.entries) add(e.m, e.value);
  if (out.empty()) out.emplace_back(prec_bits);
  return out;
}

HPReal evaluate_series(const AnsatzSpec& ansatz, const CoeffTable& table, const HPReal& c,
                       std::uint64_t k, std::optional<int> max_d) {
  const auto poly = series_in_c(ansatz, table, k, c.prec_bits(), max_d);
  HPReal acc(c.prec_bits());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc *= c;
    acc += *it;
  }
  return acc;
}

HPReal evaluate_block(const AnsatzSpec& ansatz, const CoeffTable& table, const HPReal& c,
                      std::uint64_t k, int d) {
  AnsatzSpec only = ansatz;
  std::erase_if(only.fixed, [d](const FixedTerm& f) { return f.m.d != d; });
  CoeffTable t = table;
  std::erase_if(t.entries, [d](const CoeffEntry& e) { return e.m.d != d; });
  return evaluate_series(only, t, c, k);
}

}  // namespace radical
