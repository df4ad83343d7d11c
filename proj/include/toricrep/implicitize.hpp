#pragma once

#include <optional>
#include <vector>

#include "toricrep/rep_matrix.hpp"
#include "toricrep/tpoly.hpp"

namespace toricrep {

struct ImplicitResult {
  TPoly F;  // implicit equation, integer-primitive, sign-normalized
  TPoly D;  // determinant of the first selected maximal minor
  std::optional<std::int64_t> delta;  // multiplicity of F in D
  TPoly G;                            // cofactor D / F^delta (constant when trivial)
  bool verified = false;              // substitution of the parametrization vanished

  bool extraneous_trivial() const { return G.is_constant(); }
};

// Indices of row-count many columns whose square submatrix is invertible at a
// seeded random evaluation point; greedy left-to-right rank extension.
std::vector<Index> select_max_cols(const RepMatrix& m, std::uint64_t seed);

// Exact determinant of the selected square subpencil as a homogeneous
// polynomial of degree rows(m), recovered by dense interpolation on an
// integer simplex grid.
TPoly minor_determinant(const RepMatrix& m, const std::vector<Index>& cols);

// Gcd of several independent maximal minors (stabilized across rounds),
// normalized, with extraneous-factor bookkeeping and a substitution check.
ImplicitResult implicit_equation(const RepMatrix& m, std::uint64_t seed);

// Brute-force fit: the unique (up to scale) degree-e form vanishing on
// sampled image points, or nullopt when the fit is not 1-dimensional.
std::optional<TPoly> interpolation_oracle(const std::array<ParamPoly, 4>& fs,
                                          std::int64_t degree, std::uint64_t seed);

bool verify_implicit(const TPoly& F, const std::array<ParamPoly, 4>& fs);

// The parametrization encoded in the pencil metadata (coordinates expanded
// back to polynomials in s,t).
std::array<ParamPoly, 4> recover_param_polys(const RepMatrix& m);

}  // namespace toricrep
