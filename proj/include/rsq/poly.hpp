#ifndef RSQ_POLY_HPP
#define RSQ_POLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rsq {

// Maximum number of variables a ring may declare.
constexpr int kMaxVars = 8;

using Exps = std::array<int32_t, kMaxVars>;

// Graded lexicographic comparison: -1, 0, 1.
int grlex_cmp(const Exps& a, const Exps& b);

// Sparse multivariate Laurent polynomial over Q. Terms are kept sorted by
// descending grlex order with no zero coefficients.
class Poly {
 public:
  struct Term {
    Exps e;
    mpq_class c;
  };

  Poly() = default;
  static Poly constant(const mpq_class& c);
  static Poly monomial(const Exps& e, const mpq_class& c = 1);
  // Terms must already be in descending grlex order, distinct and nonzero.
  static Poly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return t_.size() == 1; }
  std::size_t size() const { return t_.size(); }
  const Term& leading() const { return t_.front(); }

  // Componentwise minimum / maximum exponent over all terms (zero poly: 0).
  Exps min_exps() const;
  Exps max_exps() const;
  int degree_in(int var) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const mpq_class& c) const;
  Poly shifted(const Exps& e) const;  // multiply by x^e
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Exact quotient a/b, or nullopt if b does not divide a. Both arguments
  // may carry negative exponents; division of monomials is always exact.
  static std::optional<Poly> divexact(const Poly& a, const Poly& b);

  // Coefficients with respect to one variable. Requires nonnegative
  // exponents in that variable; entry k holds the coefficient of x^k.
  std::vector<Poly> coeffs_in(int var) const;
  static Poly from_coeffs(const std::vector<Poly>& c, int var);

  // Evaluation with the base variables set to the given rationals.
  mpq_class evaluate(const std::vector<mpq_class>& point, int nvars) const;

  std::size_t hash() const;

 private:
  std::vector<Term> t_;
  void canonicalize();  // sort and merge
  friend class PolyBuilder;
};

// Accumulates terms without keeping them sorted; build() sorts and merges.
class PolyBuilder {
 public:
  void add(const Exps& e, const mpq_class& c) { raw_.push_back({e, c}); }
  Poly build();

 private:
  std::vector<Poly::Term> raw_;
};

// Greatest common divisor of two polynomials with nonnegative exponents,
// normalized to leading coefficient 1 under grlex (zero if both vanish).
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace rsq

#endif
