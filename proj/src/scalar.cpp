#include "rsq/scalar.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace rsq {

RingPtr Ring::create(std::vector<VarSpec> vars) {
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw ScalarError("ring: too many variables (max " + std::to_string(kMaxVars) + ")");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.name.empty()) throw ScalarError("ring: empty variable name");
    if (v.scale <= 0) throw ScalarError("ring: variable scale must be positive");
    if (!seen.insert(v.name).second) throw ScalarError("ring: duplicate variable " + v.name);
  }
  return RingPtr(new Ring(std::move(vars)));
}

int Ring::index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i].name == name) return i;
  return -1;
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  if (vars_.size() != o.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != o.vars_[i].name || vars_[i].scale != o.vars_[i].scale) return false;
  return true;
}

RingPtr rs_ring(const std::vector<std::string>& extra) {
  std::vector<VarSpec> v{{"r", 2}, {"s", 2}};
  for (const auto& e : extra) v.push_back({e, 1});
  return Ring::create(std::move(v));
}

// ---------------------------------------------------------------------------

Scalar::Scalar(RingPtr ring) : ring_(std::move(ring)) {}

Scalar::Scalar(RingPtr ring, const mpq_class& c) : ring_(std::move(ring)), num_(Poly::constant(c)) {}

Scalar Scalar::var(const RingPtr& ring, const std::string& name, long p, long q) {
  return monomial(ring, {{name, p, q}});
}

Scalar Scalar::monomial(const RingPtr& ring, const std::vector<Power>& powers, const mpq_class& c) {
  Exps e{};
  for (const auto& pw : powers) {
    int i = ring->index(pw.name);
    if (i < 0) throw ScalarError("unknown variable " + pw.name);
    if (pw.q == 0) throw ScalarError("zero exponent denominator");
    long num = pw.p * ring->var(i).scale;
    if (num % pw.q != 0)
      throw ScalarError("exponent " + std::to_string(pw.p) + "/" + std::to_string(pw.q) +
                        " not representable for " + pw.name);
    e[i] += static_cast<int32_t>(num / pw.q);
  }
  Scalar s(ring);
  s.num_ = Poly::monomial(e, c);
  return s;
}

Scalar Scalar::from_polys(RingPtr ring, Poly num, Poly den) {
  Scalar s(std::move(ring));
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

Scalar Scalar::from_poly(RingPtr ring, Poly num) {
  Scalar s(std::move(ring));
  s.num_ = std::move(num);
  return s;
}

mpq_class Scalar::constant_value() const {
  if (!is_constant()) throw ScalarError("scalar is not constant: " + to_string());
  return num_.is_zero() ? mpq_class(0) : num_.leading().c;
}

void Scalar::normalize() {
  if (den_.is_zero()) throw ScalarError("division by zero");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Exps md = den_.min_exps();
  for (auto& x : md) x = -x;
  den_ = den_.shifted(md);
  num_ = num_.shifted(md);
  if (den_.is_monomial()) {
    num_ = num_.scaled(1 / den_.leading().c);
    den_ = Poly::constant(1);
    return;
  }
  Exps mn = num_.min_exps();
  Exps neg = mn;
  for (auto& x : neg) x = -x;
  Poly p = num_.shifted(neg);
  Poly g = poly_gcd(p, den_);
  if (!g.is_constant()) {
    p = *Poly::divexact(p, g);
    den_ = *Poly::divexact(den_, g);
  }
  num_ = p.shifted(mn);
  mpq_class lc = den_.leading().c;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  if (den_.is_monomial()) den_ = Poly::constant(1);
}

void Scalar::check_ring(const Scalar& o) const {
  if (!ring_ || !o.ring_) throw ScalarError("scalar without ring");
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw ScalarError("scalars from different rings");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ScalarError("inverse of zero");
  return from_polys(ring_, den_, num_);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Scalar s(ring_);
  s.num_ = num_.pow(static_cast<unsigned>(k));
  s.den_ = den_.pow(static_cast<unsigned>(k));
  return s;
}

Scalar Scalar::monomial_sqrt() const {
  if (!is_monomial()) throw ScalarError("monomial_sqrt of non-monomial " + to_string());
  const auto& t = num_.leading();
  Exps e = t.e;
  for (auto& x : e) {
    if (x % 2 != 0) throw ScalarError("monomial_sqrt: odd exponent in " + to_string());
    x /= 2;
  }
  mpz_class n, d;
  if (sgn(t.c) < 0 || !mpz_perfect_square_p(t.c.get_num_mpz_t()) ||
      !mpz_perfect_square_p(t.c.get_den_mpz_t()))
    throw ScalarError("monomial_sqrt: coefficient is not a rational square");
  mpz_sqrt(n.get_mpz_t(), t.c.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), t.c.get_den_mpz_t());
  Scalar s(ring_);
  s.num_ = Poly::monomial(e, mpq_class(n, d));
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_ring(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar s(a.ring_);
  if (a.den_ == b.den_) {
    s.num_ = a.num_ + b.num_;
    s.den_ = a.den_;
    if (!s.den_.is_one()) s.normalize();
    else if (s.num_.is_zero()) s.den_ = Poly::constant(1);
    return s;
  }
  s.num_ = a.num_ * b.den_ + b.num_ * a.den_;
  s.den_ = a.den_ * b.den_;
  s.normalize();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_ring(b);
  Scalar s(a.ring_);
  if (a.is_zero() || b.is_zero()) return s;
  s.num_ = a.num_ * b.num_;
  if (a.den_.is_one() && b.den_.is_one()) return s;
  s.den_ = a.den_ * b.den_;
  s.normalize();
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  a.check_ring(b);
  if (b.is_zero()) throw ScalarError("division by zero");
  return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_ring(b);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

// ---------------------------------------------------------------------------

namespace {

struct Image {
  bool monomial = false;
  Exps e{};
  mpq_class c;
  Scalar value;
};

mpq_class qpow(const mpq_class& c, long k) {
  mpq_class base = k >= 0 ? c : mpq_class(1 / c);
  unsigned long m = static_cast<unsigned long>(k >= 0 ? k : -k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), m);
  return mpq_class(n, d);
}

Scalar apply_images(const Poly& p, const std::vector<Image>& img, const RingPtr& target, bool all_mono) {
  if (all_mono) {
    PolyBuilder b;
    for (const auto& t : p.terms()) {
      Exps e{};
      mpq_class c = t.c;
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (t.e[i] == 0) continue;
        for (int j = 0; j < kMaxVars; ++j) e[j] += img[i].e[j] * t.e[i];
        if (img[i].c != 1) c *= qpow(img[i].c, t.e[i]);
      }
      b.add(e, c);
    }
    return Scalar::from_poly(target, b.build());
  }
  Scalar total(target);
  for (const auto& t : p.terms()) {
    Scalar term(target, t.c);
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (t.e[i] == 0) continue;
      if (img[i].value.is_zero() && t.e[i] < 0) throw ScalarError("substituting zero into a negative power");
      term *= img[i].value.pow(t.e[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings, const RingPtr& target) const {
  for (const auto& [name, val] : bindings) {
    if (!ring_->has(name)) throw ScalarError("substitute: unknown variable " + name);
    if (!val.ring()->same_as(*target)) throw ScalarError("substitute: binding for " + name + " not in target ring");
  }
  std::vector<Image> img(ring_->nvars());
  bool all_mono = true;
  for (int i = 0; i < ring_->nvars(); ++i) {
    const auto& v = ring_->var(i);
    auto it = bindings.find(v.name);
    Scalar value(target);
    if (it != bindings.end()) {
      value = it->second;
    } else {
      int j = target->index(v.name);
      if (j < 0) throw ScalarError("substitute: variable " + v.name + " missing from target ring");
      int ts = target->var(j).scale;
      if (ts % v.scale != 0) throw ScalarError("substitute: incompatible scale for " + v.name);
      Exps e{};
      e[j] = ts / v.scale;
      value = from_poly(target, Poly::monomial(e));
    }
    img[i].value = value;
    if (value.is_monomial()) {
      img[i].monomial = true;
      img[i].e = value.num().leading().e;
      img[i].c = value.num().leading().c;
    } else {
      all_mono = false;
    }
  }
  Scalar n = apply_images(num_, img, target, all_mono);
  if (den_.is_one()) return n;
  Scalar d = apply_images(den_, img, target, all_mono);
  return n / d;
}

Scalar Scalar::convert(const RingPtr& target) const {
  if (ring_ == target || ring_->same_as(*target)) {
    Scalar s = *this;
    s.ring_ = target;
    return s;
  }
  return substitute({}, target);
}

mpq_class Scalar::evaluate(const std::map<std::string, mpq_class>& point) const {
  std::vector<mpq_class> pt(ring_->nvars());
  for (int i = 0; i < ring_->nvars(); ++i) {
    auto it = point.find(ring_->var(i).name);
    if (it == point.end()) throw ScalarError("evaluate: no value for " + ring_->var(i).name);
    pt[i] = it->second;
  }
  mpq_class d = den_.evaluate(pt, ring_->nvars());
  if (sgn(d) == 0) throw ScalarError("evaluate: denominator vanishes");
  mpq_class r = num_.evaluate(pt, ring_->nvars()) / d;
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// text form

std::string poly_to_string(const Poly& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    std::vector<std::string> factors;
    bool unit = true;
    for (int i = 0; i < ring.nvars(); ++i) {
      if (t.e[i] == 0) continue;
      unit = false;
      const auto& v = ring.var(i);
      long g = std::gcd(static_cast<long>(t.e[i]), static_cast<long>(v.scale));
      long n = t.e[i] / g, d = v.scale / g;
      std::string f = v.name;
      if (d != 1) f += "^(" + std::to_string(n) + "/" + std::to_string(d) + ")";
      else if (n != 1) f += "^" + std::to_string(n);
      factors.push_back(f);
    }
    if (unit || c != 1) factors.insert(factors.begin(), c.get_str());
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out += "*";
      out += factors[k];
    }
  }
  return out;
}

std::string Scalar::to_string() const {
  if (!ring_) return "<no ring>";
  if (den_.is_one()) return poly_to_string(num_, *ring_);
  return "(" + poly_to_string(num_, *ring_) + ")/(" + poly_to_string(den_, *ring_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  const RingPtr& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ScalarError("parse error at " + std::to_string(pos_) + ": " + msg + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }
  long small_integer() {
    mpz_class z = integer();
    if (!z.fits_slong_p()) fail("exponent too large");
    return z.get_si();
  }

  Scalar expr() {
    Scalar v(ring_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    v = term();
    if (neg) v = -v;
    while (true) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else break;
    }
    return v;
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else break;
    }
    return v;
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    return power();
  }

  void exponent(long& p, long& q) {
    q = 1;
    if (accept('(')) {
      bool neg = accept('-');
      p = small_integer();
      if (neg) p = -p;
      if (accept('/')) q = small_integer();
      expect(')');
    } else {
      bool neg = accept('-');
      p = small_integer();
      if (neg) p = -p;
    }
    if (q == 0) fail("zero exponent denominator");
  }

  Scalar power() {
    skip();
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (!ring_->has(name)) fail("unknown variable " + name);
      long p = 1, q = 1;
      if (accept('^')) exponent(p, q);
      return Scalar::var(ring_, name, p, q);
    }
    Scalar base(ring_);
    if (accept('(')) {
      base = expr();
      expect(')');
    } else {
      base = Scalar(ring_, mpq_class(integer()));
    }
    if (accept('^')) {
      long p, q;
      exponent(p, q);
      if (q != 1) fail("fractional power of a compound expression");
      base = base.pow(p);
    }
    return base;
  }
};

}  // namespace

Scalar Scalar::parse(const RingPtr& ring, const std::string& text) { return Parser(ring, text).run(); }

// ---------------------------------------------------------------------------

Scalar rs_integer(const Scalar& x, const Scalar& y, long m) {
  if (m < 0) throw ScalarError("rs_integer: negative argument");
  Scalar total(x.ring());
  for (long k = 0; k < m; ++k) total += x.pow(m - 1 - k) * y.pow(k);
  return total;
}

Scalar rs_factorial(const Scalar& x, const Scalar& y, long m) {
  if (m < 0) throw ScalarError("rs_factorial: negative argument");
  Scalar total(x.ring(), 1);
  for (long k = 1; k <= m; ++k) total *= rs_integer(x, y, k);
  return total;
}

Scalar rs_binomial(const Scalar& x, const Scalar& y, long m, long k) {
  if (k < 0 || k > m) throw ScalarError("rs_binomial: need 0 <= k <= m");
  return rs_factorial(x, y, m) / (rs_factorial(x, y, k) * rs_factorial(x, y, m - k));
}

Scalar rs_integer(const RingPtr& ring, long m) {
  return rs_integer(Scalar::var(ring, "r"), Scalar::var(ring, "s"), m);
}
Scalar rs_factorial(const RingPtr& ring, long m) {
  return rs_factorial(Scalar::var(ring, "r"), Scalar::var(ring, "s"), m);
}
Scalar rs_binomial(const RingPtr& ring, long m, long k) {
  return rs_binomial(Scalar::var(ring, "r"), Scalar::var(ring, "s"), m, k);
}

}  // namespace rsq
