#pragma once

#include <nlohmann/json.hpp>

#include "toricrep/implicitize.hpp"
#include "toricrep/polytope.hpp"
#include "toricrep/rep_matrix.hpp"

namespace toricrep {

using OrderedJson = nlohmann::ordered_json;

// {"vertices": [[x,y],...]}
OrderedJson polytope_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const OrderedJson& j);

// {"nu0":..., "d":..., "rows":[[x,y],...], "cols":n,
//  "M":{"T1":[["num/den",...],...], ..., "T4":...}}
OrderedJson rep_matrix_json(const RepMatrix& m);

// {"F":{"degree":..., "terms":[{"exp":[a,b,c,d],"coeff":"int"},...]},
//  "delta":..., "G_degree":..., "verified":...}
OrderedJson implicit_result_json(const ImplicitResult& r);

OrderedJson tpoly_json(const TPoly& f);

}  // namespace toricrep
