#pragma once

#include <array>

#include "toricrep/cycle_complex.hpp"

namespace toricrep {

// Point of P^3, canonicalized so the first nonzero coordinate is 1.
struct P3Point {
  std::array<Rational, 4> coord;

  static P3Point of(std::array<Rational, 4> c);
};

// The pencil T1*M1 + T2*M2 + T3*M3 + T4*M4 whose rank drops exactly on the
// parametrized surface (and possibly on an extraneous locus when the base
// points are not locally complete intersections). Column j encodes a linear
// syzygy of the reparametrized coordinates.
struct RepMatrix {
  GradedBasis row_basis;            // degree nu0 monomial basis
  std::array<QMatrix, 4> coeff;     // M1..M4, identical shapes
  std::int64_t nu0 = 0;
  std::int64_t d = 1;
  LatticePolytope polytope;
  std::array<GVector, 4> g;

  Index rows() const { return coeff[0].rows(); }
  Index cols() const { return coeff[0].cols(); }
};

// Assembles the pencil from the canonical kernel basis of the first Koszul
// differential in degree nu0 + d. Requires chi(nu0) = 0.
RepMatrix build_rep_matrix(const ComplexContext& ctx, std::int64_t nu0);

QMatrix evaluate(const RepMatrix& m, const P3Point& p);

struct RankResult {
  Index rank = 0;
  bool is_member = false;  // rank dropped below the row count
};

RankResult rank_at(const RepMatrix& m, const P3Point& p);

}  // namespace toricrep
