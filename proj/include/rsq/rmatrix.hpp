#ifndef RSQ_RMATRIX_HPP
#define RSQ_RMATRIX_HPP

#include <functional>
#include <vector>

#include "rsq/rootvec.hpp"

namespace rsq {

// Operators on V (x) V use the flattening v_i (x) v_j -> (i-1)N + j.
// tensor_unit(i, j, k, l) is E_ij (x) E_kl, indices 1-based.
SMat tensor_unit(const RingPtr& ring, int N, int i, int j, int k, int l, const Scalar& c);

// sigma_i, t_i and a_ij of the explicit B, C, D formulas.
struct CoefficientTables {
  Family family = Family::B;
  int n = 0, N = 0;
  RingPtr ring;

  int sigma(int i) const;
  Scalar t(int i) const;
  Scalar a(int i, int j) const;  // defined for j != i, i'
  int prime(int i) const { return N + 1 - i; }
};

CoefficientTables coefficient_tables(Family family, int rank, const RingPtr& ring);

SMat build_rhat_explicit(Family family, int rank, const RingPtr& ring);
// Printed inverse for B, C, D; for A the inverse from the quadratic minimal polynomial.
SMat build_rbar_inverse(Family family, int rank, const RingPtr& ring);

// (f_gamma^m, e_gamma^m) as a function of (root index, m).
using PairingConstants = std::function<Scalar(int, int)>;
PairingConstants closed_constants(const RootSystem& rs, const RingPtr& ring);

// Local factor sum_m (f_gamma^m, e_gamma^m)^{-1} f_gamma^m (x) e_gamma^m, truncated
// where the powers vanish.
SMat local_theta(const RootVectorMatrices& rvm, int root, const PairingConstants& constants);
// Product of local factors, decreasing in the convex order from left to right.
SMat build_theta(const Representation& rep, const ConvexOrder& order, const RootVectorMatrices& rvm,
                 const PairingConstants& constants);
SMat f_twist(const Representation& rep);
SMat build_rhat_factorized(Family family, int rank, const RingPtr& ring);
SMat build_rhat_factorized(const Representation& rep, const ConvexOrder& order);

// r <-> s on every entry.
SMat sigma_swap(const SMat& m);
// tau o f^{-1} o sigma(Theta).
SMat build_rbar_sigma(const Representation& rep, const ConvexOrder& order);

// Eigenvalues on the highest weight vectors, in the order returned by highest_weight_vectors.
std::vector<Scalar> rhat_eigenvalues(Family family, int rank, const RingPtr& ring);

Report check_eigenvalues(const SMat& rhat, const HighestWeightTriple& hwv, const std::vector<Scalar>& eigenvalues);
Report check_intertwining(const SMat& rhat, const Representation& rep);
Report check_braid(const SMat& rhat, int N);
Report check_min_poly(const SMat& rhat, const std::vector<Scalar>& eigenvalues);
Report check_inverse(const SMat& rhat, const SMat& rbar);
Report check_weight_preserving(const SMat& op, const Representation& rep);
Report check_coefficient_tables(const CoefficientTables& t, const Representation& rep);

// Explicit R versus factorized route.
Report check_route_equivalence(Family family, int rank, const RingPtr& ring);

}  // namespace rsq

#endif
