#include "rsq/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rsq {

int grlex_cmp(const Exps& a, const Exps& b) {
  int64_t da = 0, db = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_before(const Poly::Term& x, const Poly::Term& y) {
  return grlex_cmp(x.e, y.e) > 0;
}

Exps add_exps(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exps sub_exps(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

const Exps kZeroExps{};

}  // namespace

Poly PolyBuilder::build() {
  Poly p;
  p.t_ = std::move(raw_);
  raw_.clear();
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  for (auto& term : t_) term.c.canonicalize();
  std::sort(t_.begin(), t_.end(), term_before);
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& term : t_) {
    if (!out.empty() && out.back().e == term.e) {
      out.back().c += term.c;
    } else {
      if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  t_ = std::move(out);
}

Poly Poly::constant(const mpq_class& c) {
  Poly p;
  if (sgn(c) != 0) p.t_.push_back({kZeroExps, c});
  if (!p.t_.empty()) p.t_[0].c.canonicalize();
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.t_ = std::move(terms);
  return p;
}

Poly Poly::monomial(const Exps& e, const mpq_class& c) {
  Poly p;
  if (sgn(c) != 0) p.t_.push_back({e, c});
  if (!p.t_.empty()) p.t_[0].c.canonicalize();
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].e == kZeroExps);
}

bool Poly::is_one() const {
  return t_.size() == 1 && t_[0].e == kZeroExps && t_[0].c == 1;
}

Exps Poly::min_exps() const {
  Exps m{};
  if (t_.empty()) return m;
  m = t_[0].e;
  for (const auto& term : t_)
    for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], term.e[i]);
  return m;
}

Exps Poly::max_exps() const {
  Exps m{};
  if (t_.empty()) return m;
  m = t_[0].e;
  for (const auto& term : t_)
    for (int i = 0; i < kMaxVars; ++i) m[i] = std::max(m[i], term.e[i]);
  return m;
}

int Poly::degree_in(int var) const {
  if (t_.empty()) return -1;
  int d = t_[0].e[var];
  for (const auto& term : t_) d = std::max<int>(d, term.e[var]);
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& term : p.t_) term.c = -term.c;
  return p;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool negate_b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Poly::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int c;
    if (i == x.size()) c = -1;
    else if (j == y.size()) c = 1;
    else c = grlex_cmp(x[i].e, y[j].e);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
      if (negate_b) out.back().c = -out.back().c;
    } else {
      mpq_class s = negate_b ? mpq_class(x[i].c - y[j].c) : mpq_class(x[i].c + y[j].c);
      if (sgn(s) != 0) out.push_back({x[i].e, s});
      ++i;
      ++j;
    }
  }
  return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.is_monomial()) {
    Poly p;
    p.t_.reserve(a.t_.size());
    for (const auto& term : a.t_)
      p.t_.push_back({add_exps(term.e, b.t_[0].e), term.c * b.t_[0].c});
    return p;
  }
  if (a.is_monomial()) return b * a;
  PolyBuilder builder;
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) builder.add(add_exps(x.e, y.e), x.c * y.c);
  return builder.build();
}

Poly Poly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return Poly();
  Poly p = *this;
  for (auto& term : p.t_) term.c *= c;
  return p;
}

Poly Poly::shifted(const Exps& e) const {
  Poly p = *this;
  for (auto& term : p.t_) term.e = add_exps(term.e, e);
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i) {
    if (a.t_[i].e != b.t_[i].e || a.t_[i].c != b.t_[i].c) return false;
  }
  return true;
}

std::optional<Poly> Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_monomial()) {
    Poly q;
    q.t_.reserve(a.t_.size());
    for (const auto& term : a.t_)
      q.t_.push_back({sub_exps(term.e, b.t_[0].e), term.c / b.t_[0].c});
    return q;
  }
  // quotient exponents are confined to a box determined by the extreme
  // exponents of a and b in every variable
  Exps lo = sub_exps(a.min_exps(), b.min_exps());
  Exps hi = sub_exps(a.max_exps(), b.max_exps());
  for (int i = 0; i < kMaxVars; ++i)
    if (lo[i] > hi[i]) return std::nullopt;
  PolyBuilder q;
  Poly r = a;
  const Term& lb = b.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exps e = sub_exps(lr.e, lb.e);
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    mpq_class c = lr.c / lb.c;
    q.add(e, c);
    r = r - b * monomial(e, c);
  }
  return q.build();
}

std::vector<Poly> Poly::coeffs_in(int var) const {
  int d = degree_in(var);
  std::vector<PolyBuilder> builders(d < 0 ? 0 : d + 1);
  for (const auto& term : t_) {
    if (term.e[var] < 0) throw std::logic_error("coeffs_in: negative exponent");
    Exps e = term.e;
    e[var] = 0;
    builders[term.e[var]].add(e, term.c);
  }
  std::vector<Poly> out;
  out.reserve(builders.size());
  for (auto& b : builders) out.push_back(b.build());
  return out;
}

Poly Poly::from_coeffs(const std::vector<Poly>& c, int var) {
  PolyBuilder builder;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (const auto& term : c[k].t_) {
      Exps e = term.e;
      e[var] += static_cast<int32_t>(k);
      builder.add(e, term.c);
    }
  }
  return builder.build();
}

mpq_class Poly::evaluate(const std::vector<mpq_class>& point, int nvars) const {
  mpq_class total = 0;
  for (const auto& term : t_) {
    mpq_class v = term.c;
    for (int i = 0; i < nvars; ++i) {
      int k = term.e[i];
      if (k == 0) continue;
      if (sgn(point[i]) == 0) throw std::domain_error("evaluation at zero of a negative power");
      mpq_class base = k > 0 ? point[i] : mpq_class(1 / point[i]);
      mpz_class n, d;
      mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), std::abs(k));
      mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), std::abs(k));
      v *= mpq_class(n, d);
    }
    total += v;
  }
  total.canonicalize();
  return total;
}

std::size_t Poly::hash() const {
  std::size_t h = t_.size();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& term : t_) {
    for (int i = 0; i < kMaxVars; ++i) mix(std::hash<int32_t>{}(term.e[i]));
    mix(std::hash<std::string>{}(term.c.get_str()));
  }
  return h;
}

// ---------------------------------------------------------------------------
// gcd via recursive subresultant PRS

namespace {

using UPoly = std::vector<Poly>;  // coefficients in the main variable

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Poly normalize_lc(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading().c);
}

Poly div_or_throw(const Poly& a, const Poly& b) {
  auto q = Poly::divexact(a, b);
  if (!q) throw std::logic_error("gcd: inexact division");
  return *q;
}

UPoly prem(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  const Poly& lb = b.back();
  int db = udeg(b);
  int e = udeg(a) - db + 1;
  while (!r.empty() && udeg(r) >= db) {
    Poly lr = r.back();
    int shift = udeg(r) - db;
    for (auto& c : r) c = c * lb;
    for (int k = 0; k <= db; ++k) r[k + shift] -= lr * b[k];
    trim(r);
    --e;
  }
  if (e > 0) {
    Poly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c = c * f;
  }
  return r;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content(const UPoly& p) {
  Poly g;
  for (const auto& c : p) {
    g = gcd_rec(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Poly gcd_rec(const Poly& a0, const Poly& b0) {
  if (a0.is_zero()) return normalize_lc(b0);
  if (b0.is_zero()) return normalize_lc(a0);
  Exps ma = a0.min_exps(), mb = b0.min_exps();
  Exps m;
  Exps na, nb;
  for (int i = 0; i < kMaxVars; ++i) {
    m[i] = std::min(ma[i], mb[i]);
    na[i] = -ma[i];
    nb[i] = -mb[i];
  }
  Poly a = a0.shifted(na);
  Poly b = b0.shifted(nb);
  Poly mono = Poly::monomial(m);
  if (a.is_constant() || b.is_constant()) return mono;
  if (a == b || a == -b) return normalize_lc(a * mono);

  Exps ea = a.max_exps(), eb = b.max_exps();
  int var = -1;
  for (int i = 0; i < kMaxVars; ++i) {
    if (ea[i] > 0 || eb[i] > 0) {
      var = i;
      break;
    }
  }
  if (ea[var] == 0 || eb[var] == 0) {
    // one side is free of the main variable: gcd with each coefficient
    const Poly& with = ea[var] == 0 ? b : a;
    Poly g = ea[var] == 0 ? a : b;
    for (const auto& c : with.coeffs_in(var)) {
      g = gcd_rec(g, c);
      if (g.is_constant()) break;
    }
    return normalize_lc(g * mono);
  }

  UPoly A = a.coeffs_in(var), B = b.coeffs_in(var);
  Poly ca = content(A), cb = content(B);
  Poly cg = gcd_rec(ca, cb);
  for (auto& c : A) c = div_or_throw(c, ca);
  for (auto& c : B) c = div_or_throw(c, cb);
  if (udeg(A) < udeg(B)) std::swap(A, B);

  Poly g = Poly::constant(1), h = Poly::constant(1);
  while (true) {
    int delta = udeg(A) - udeg(B);
    UPoly R = prem(A, B);
    if (R.empty()) break;
    if (udeg(R) == 0) {
      B = UPoly{Poly::constant(1)};
      break;
    }
    Poly divisor = g * h.pow(static_cast<unsigned>(delta));
    A = std::move(B);
    for (auto& c : R) c = div_or_throw(c, divisor);
    B = std::move(R);
    g = A.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = div_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Poly cB = content(B);
  for (auto& c : B) c = div_or_throw(c, cB);
  return normalize_lc(Poly::from_coeffs(B, var) * cg * mono);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

}  // namespace rsq
