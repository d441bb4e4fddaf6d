#ifndef RSQ_EMBED_HPP
#define RSQ_EMBED_HPP

#include <string>
#include <vector>

#include "rsq/lyndon.hpp"
#include "rsq/rep.hpp"
#include "rsq/rootvec.hpp"

namespace rsq {

// r, s at quarter-integer resolution, plus scale-1 extras.
RingPtr quarter_ring(const std::vector<std::string>& extra = {});

// q = r^{1/2} s^{-1/2} as an element of the ring.
Scalar q_of(const RingPtr& ring);

// Diagonal matrix with each entry raised to the power sign/2.
SMat diagonal_half_power(const SMat& d, int sign);

// e~_i = e_i w_i^{-1/2}, f~_i = s_i f_i w'_i^{-1/2}, w~_i = w_i^{1/2} w'_i^{-1/2}
// on the first fundamental module (indices 1..n).
struct ModifiedGenerators {
  std::vector<SMat> e, f, k;
};

ModifiedGenerators modified_generators(const Representation& rep);

// One-parameter relations for the modified generators: commutativity,
// conjugation, [e~_i, f~_j] and the symmetric q-Serre relations.
Report verify_dj_relations(const Representation& rep);

// Closed-form kappa_gamma and d_gamma = prod s_i^{k_i}.
Scalar kappa_closed(const RootSystem& rs, const RingPtr& ring, int root);
Scalar d_gamma(const RootSystem& rs, const RingPtr& ring, int root);

// kappa_{a+b} = kappa_a kappa_b (w'_b, w_a)^{1/2} along minimal pairs, against the closed forms.
Report verify_kappa(const RootSystem& rs, const ConvexOrder& order, const RingPtr& ring);

// e~_gamma = kappa^{-1} e_gamma w_gamma^{-1/2}, f~_gamma = d_gamma kappa^{-1} f_gamma w'_gamma^{-1/2},
// where e~_gamma, f~_gamma follow the one-parameter recursion.
Report verify_root_vector_embedding(const Representation& rep, const ConvexOrder& order);

enum class TwistSign { LowerPositive, UpperPositive };
std::string twist_sign_name(TwistSign s);

// Type A: R = F^{-1} Rbar F^{-1} with Rbar the one-parameter R at q = r^{1/2} s^{-1/2}
// and F(v_i (x) v_j) = exp(phi_ij) v_i (x) v_j, exp(2 phi_ij) = (rs)^{1/2} for i > j
// (LowerPositive) or i < j (UpperPositive), phi skew-symmetric.
Report verify_twist_A(int rank, bool affine, TwistSign sign = TwistSign::UpperPositive);

// Diagonal twist forced by the diagonal entries of R and Rbar, then the residual
// F^{-1} Rbar F^{-1} - R classified by summand family.
struct TwistObstruction {
  Family family = Family::B;
  int rank = 0;
  std::vector<std::vector<Scalar>> exp_two_phi;  // 1-based, entry [i][j] = exp(2 phi_ij)
  bool skew = false;
  std::vector<std::string> matching;  // families whose entries agree
  std::vector<std::string> failing;   // families with a nonzero residual
  std::string witness;                // first nonzero residual entry
  bool obstructed() const { return !failing.empty(); }
};

TwistObstruction diagonal_twist_analysis(Family family, int rank);
TwistObstruction b_type_obstruction(int rank);
Report report_obstruction(const TwistObstruction& t);

}  // namespace rsq

#endif
