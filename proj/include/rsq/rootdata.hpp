#ifndef RSQ_ROOTDATA_HPP
#define RSQ_ROOTDATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsq/scalar.hpp"

namespace rsq {

enum class Family { A, B, C, D };

Family parse_family(const std::string& s);
char family_char(Family f);
int min_rank(Family f);

// Weights live in the span of the epsilon basis; entries are rational.
using Weight = std::vector<mpq_class>;

struct Root {
  std::vector<int> alpha;  // coefficients over the simple roots
  Weight eps;
  int height = 0;
};

class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return n_; }
  int eps_dim() const { return m_; }
  std::string name() const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Weight& simple(int i) const { return simple_.at(i - 1); }  // 1-based
  Weight eps(int a) const;                                            // 1-based
  Weight zero() const { return Weight(m_, 0); }
  Weight from_alpha(const std::vector<mpq_class>& k) const;
  std::optional<int> root_index(const Weight& w) const;  // into positive_roots()
  bool is_root(const Weight& w) const;

  // Ringel form, symmetric form and derived integer tables (1-based).
  mpq_class ringel(const Weight& a, const Weight& b) const;
  mpq_class sym(const Weight& a, const Weight& b) const { return ringel(a, b) + ringel(b, a); }
  int d(int i) const;
  int cartan(int i, int j) const;
  int ringel_simple(int i, int j) const;
  const std::vector<std::vector<mpq_class>>& ringel_matrix_eps() const { return M_; }

  Weight rho() const;
  bool is_dominant(const Weight& w) const;
  const Root& highest_root() const;

  // First fundamental module: dimension, basis weights (1-based), a' index.
  int fund_dim() const;
  Weight basis_weight(int a) const;
  int prime(int a) const { return fund_dim() + 1 - a; }

 private:
  Family family_ = Family::A;
  int n_ = 0;
  int m_ = 0;
  std::vector<Weight> simple_;
  std::vector<Root> positive_;
  std::vector<std::vector<mpq_class>> M_;
};

// Named positive roots gamma_ij and beta_ij (see README for the table).
Weight gamma_root(const RootSystem& rs, int i, int j);
Weight beta_root(const RootSystem& rs, int i, int j);
struct RootName {
  bool beta = false;
  int i = 0, j = 0;
};
// Inverse of gamma_root / beta_root; throws for weights that are not named roots.
RootName root_name(const RootSystem& rs, const Weight& root);
// "gamma_i_j" / "beta_i_j" label of a positive root.
std::string root_label(const RootSystem& rs, const Weight& root);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const mpq_class& c, const Weight& a);
Weight operator-(const Weight& a);
std::string weight_to_string(const Weight& w);

// Monomial r^p s^q with rational exponents (stored at the ring's scales).
Scalar rs_monomial(const RingPtr& ring, const mpq_class& p, const mpq_class& q);

// (w'_lambda, w_mu) = r^<lambda,mu> s^-<mu,lambda>.
Scalar omega_pairing(const RootSystem& rs, const RingPtr& ring, const Weight& lambda, const Weight& mu);
// f(lambda, mu) = (w'_mu, w_lambda)^{-1}.
Scalar f_function(const RootSystem& rs, const RingPtr& ring, const Weight& lambda, const Weight& mu);

long weyl_dimension(const RootSystem& rs, const Weight& lambda);

struct AffineData {
  Root theta;
  // Index 0 stands for alpha_0 = -theta.
  std::vector<std::vector<Scalar>> omega;
  std::vector<std::vector<int>> cartan;
  int d0 = 1;
  Weight alpha(const RootSystem& rs, int i) const;
};

AffineData affine_data(const RootSystem& rs, const RingPtr& ring);

// r_i = r^{d_i}, s_i = s^{d_i}; index 0 uses d_0 = (theta,theta)/2.
Scalar r_i(const RootSystem& rs, const RingPtr& ring, int i);
Scalar s_i(const RootSystem& rs, const RingPtr& ring, int i);

}  // namespace rsq

#endif
