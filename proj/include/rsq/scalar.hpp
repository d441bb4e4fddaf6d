#ifndef RSQ_SCALAR_HPP
#define RSQ_SCALAR_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsq/poly.hpp"

namespace rsq {

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stored exponent e of a variable with scale k stands for name^(e/k).
// r and s normally carry scale 2, so that r^(1/2) is a plain exponent 1.
struct VarSpec {
  std::string name;
  int scale = 1;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr create(std::vector<VarSpec> vars);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const VarSpec& var(int i) const { return vars_.at(i); }
  const std::vector<VarSpec>& vars() const { return vars_; }
  int index(const std::string& name) const;  // -1 if absent
  bool has(const std::string& name) const { return index(name) >= 0; }
  bool same_as(const Ring& o) const;

 private:
  explicit Ring(std::vector<VarSpec> v) : vars_(std::move(v)) {}
  std::vector<VarSpec> vars_;
};

// r, s at scale 2 followed by the given scale-1 variables.
RingPtr rs_ring(const std::vector<std::string>& extra = {});

// Element of the fraction field of Laurent polynomials, kept canonical:
// the denominator is a polynomial with no monomial factor, coprime to the
// numerator and with grlex leading coefficient 1.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(RingPtr ring);
  Scalar(RingPtr ring, const mpq_class& c);
  Scalar(RingPtr ring, long c) : Scalar(std::move(ring), mpq_class(c)) {}
  Scalar(RingPtr ring, int c) : Scalar(std::move(ring), mpq_class(c)) {}

  // name^(p/q); the stored exponent p*scale/q must be integral.
  static Scalar var(const RingPtr& ring, const std::string& name, long p = 1, long q = 1);
  // Product of name^(p/q) over the listed (name, p, q) triples.
  struct Power {
    std::string name;
    long p;
    long q = 1;
  };
  static Scalar monomial(const RingPtr& ring, const std::vector<Power>& powers,
                         const mpq_class& c = 1);
  static Scalar from_polys(RingPtr ring, Poly num, Poly den);
  static Scalar from_poly(RingPtr ring, Poly num);

  const RingPtr& ring() const { return ring_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  mpq_class constant_value() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long k) const;
  // Square root of a monomial with even stored exponents.
  Scalar monomial_sqrt() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, long c) { return a * Scalar(a.ring_, c); }
  friend Scalar operator*(long c, const Scalar& a) { return a * Scalar(a.ring_, c); }
  friend Scalar operator+(const Scalar& a, long c) { return a + Scalar(a.ring_, c); }
  friend Scalar operator-(const Scalar& a, long c) { return a - Scalar(a.ring_, c); }
  friend Scalar operator-(long c, const Scalar& a) { return Scalar(a.ring_, c) - a; }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Simultaneous substitution. Each binding gives the image of the base
  // unit name^(1/scale) of a variable; unbound variables map to the
  // variable of the same name in the target ring.
  Scalar substitute(const std::map<std::string, Scalar>& bindings, const RingPtr& target) const;
  Scalar substitute(const std::map<std::string, Scalar>& bindings) const {
    return substitute(bindings, ring_);
  }
  // Reinterpret in another ring by variable name. Target scales must be
  // multiples of the source scales.
  Scalar convert(const RingPtr& target) const;

  // Value at a rational point given for the base units.
  mpq_class evaluate(const std::map<std::string, mpq_class>& point) const;

  std::string to_string() const;
  static Scalar parse(const RingPtr& ring, const std::string& text);

  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

 private:
  RingPtr ring_;
  Poly num_;
  Poly den_ = Poly::constant(1);
  void normalize();
  void check_ring(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Text form of a Laurent polynomial with exponents printed per variable scale.
std::string poly_to_string(const Poly& p, const Ring& ring);

// (x,y)-integers: [m] = x^{m-1} + x^{m-2} y + ... + y^{m-1}.
Scalar rs_integer(const Scalar& x, const Scalar& y, long m);
Scalar rs_factorial(const Scalar& x, const Scalar& y, long m);
Scalar rs_binomial(const Scalar& x, const Scalar& y, long m, long k);
// Shorthands with x = r, y = s of the given ring.
Scalar rs_integer(const RingPtr& ring, long m);
Scalar rs_factorial(const RingPtr& ring, long m);
Scalar rs_binomial(const RingPtr& ring, long m, long k);

}  // namespace rsq

#endif
