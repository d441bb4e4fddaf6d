#ifndef RSQ_ROOTVEC_HPP
#define RSQ_ROOTVEC_HPP

#include <optional>
#include <vector>

#include "rsq/lyndon.hpp"
#include "rsq/rep.hpp"

namespace rsq {

// rho(e_gamma), rho(f_gamma) indexed like rs.positive_roots().
struct RootVectorMatrices {
  std::vector<SMat> e, f;
};

RootVectorMatrices build_root_vector_matrices(const Representation& rep, const ConvexOrder& order);

// Printed closed forms of rho(e_gamma), rho(f_gamma) on the first fundamental module.
std::pair<SMat, SMat> closed_root_vector(const Representation& rep, int root);

// Closed forms, nilpotency and weight shifts.
Report verify_closed_forms(const Representation& rep, const ConvexOrder& order, const RootVectorMatrices& rvm);

}  // namespace rsq

#endif
