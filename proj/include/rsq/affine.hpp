#ifndef RSQ_AFFINE_HPP
#define RSQ_AFFINE_HPP

#include <string>
#include <vector>

#include "rsq/rmatrix.hpp"

namespace rsq {

// r, s and a single spectral variable.
RingPtr spectral_ring(const std::string& z = "z");

Scalar xi_constant(Family family, int rank, const RingPtr& ring);

// Explicit R(z) for the first fundamental evaluation modules, entries polynomial in z.
SMat build_affine_rhat(Family family, int rank, const RingPtr& ring, const std::string& z = "z");

enum class BaxterScheme { TwoEigen, ThreeEigenA, ThreeEigenB };
std::string scheme_name(BaxterScheme s);
BaxterScheme default_scheme(Family family);

// Eigenvalues in the labelling used by the Baxterization formulas:
// A: (-r s^{-1}, 1); B, C, D: as on w1, w2, w3.
std::vector<Scalar> baxter_eigenvalues(Family family, int rank, const RingPtr& ring);

// Linear combination of rhat, rbar = rhat^{-1} and Id with z-dependent coefficients.
SMat baxterize(const SMat& rhat, const SMat& rbar, const std::vector<Scalar>& eigenvalues, BaxterScheme scheme,
               const Scalar& z);
SMat baxterize(Family family, int rank, BaxterScheme scheme, const RingPtr& ring, const std::string& z = "z");

// Per-scheme comparison with the explicit R(z); the family's default scheme must match.
Report check_baxterization(Family family, int rank);

enum class Constraint { Required, InverseOnly };
// R(u/v) (rho_u (x) rho_v)(x) = (rho_v (x) rho_u)(x) R(u/v) for x in e_i, f_i, w_i, w'_i, 0 <= i <= n.
// Required imposes a b = (rs)^{-kappa}; InverseOnly imposes a b = 1.
Report check_affine_intertwiner(const SMat& rz, Family family, int rank, Constraint constraint = Constraint::Required,
                                const std::string& z = "z");
Report check_affine_intertwiner(Family family, int rank, Constraint constraint = Constraint::Required);

// R12(y) R23(xy) R12(x) = R23(x) R12(xy) R23(y) with x = u/v, y = v/w.
Report check_spectral_ybe(const SMat& rz, int N, const std::string& z = "z");
Report check_spectral_ybe(Family family, int rank);

// Entry degrees in z are at most 2 (B, C, D) or 1 (A); R(0) and R(1) have the expected shape.
Report check_affine_shape(Family family, int rank);

// Specializations r -> q, s -> q^{-1} compared with the one-parameter operators;
// A (finite and affine, with z -> 0) and B (finite).
Report specialize_and_compare(Family family, int rank);

}  // namespace rsq

#endif
