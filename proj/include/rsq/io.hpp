#ifndef RSQ_IO_HPP
#define RSQ_IO_HPP

#include <string>

#include <json.hpp>

#include "rsq/matrix.hpp"
#include "rsq/report.hpp"

namespace rsq {

using json = nlohmann::ordered_json;

// {"n_rows", "n_cols", "vars", "scales", "entries": [{"row", "col", "num", "den"}]}
// with terms {"coeff": "p/q", "exps": [stored exponents]}; a stored exponent e of a
// variable with scale k means name^(e/k), so r and s use the doubled half-power basis.
json matrix_to_json(const SMat& m);
// Rebuilds the ring from "vars" and "scales" unless one is given.
SMat matrix_from_json(const json& j, RingPtr ring = nullptr);

json report_to_json(const Report& r);

}  // namespace rsq

#endif
