#pragma once

#include <array>
#include <map>
#include <memory>

#include "toricrep/eigen_support.hpp"
#include "toricrep/param_poly.hpp"
#include "toricrep/polytope.hpp"

namespace toricrep {

// Monomial basis of the degree-n graded piece of the toric coordinate ring:
// the lattice points of n*Q (and the single point {0,0} in degree 0). Valid
// because 2-D lattice polytopes are normal, so no quotient arithmetic is
// needed for the graded data consumed downstream.
struct GradedBasis {
  std::int64_t degree = 0;
  PointList points;
};

class ToricAlgebra {
 public:
  ToricAlgebra() = default;
  explicit ToricAlgebra(LatticePolytope q);

  const LatticePolytope& polytope() const { return q_; }

  // Cached; thread-safe fills, lock-free reads of previously built bases.
  const GradedBasis& basis(std::int64_t n) const;
  Index dim(std::int64_t n) const;  // 0 for n < 0

 private:
  LatticePolytope q_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Element of the degree-d graded piece, as rational coefficients on the
// lattice points of d*Q.
class GVector {
 public:
  GVector() = default;
  GVector(std::int64_t degree, std::map<Point2, Rational> coeffs);

  std::int64_t degree() const { return degree_; }
  const std::map<Point2, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Expands back to sum of coeff * s^a t^b.
  ParamPoly to_param_poly() const;

 private:
  std::int64_t degree_ = 0;
  std::map<Point2, Rational> coeffs_;
};

// Reads each f_i as a degree-d element of the coordinate ring of Q. Requires
// the support of every f_i to lie in d*Q; reports the first offending
// exponent otherwise.
std::array<GVector, 4> reparametrize(const std::array<ParamPoly, 4>& fs,
                                     const LatticePolytope& q, std::int64_t d);

// Matrix of multiplication by g from degree nu to degree nu + deg(g), with
// bases ordered as in ToricAlgebra::basis. Shape dim(nu+d) x dim(nu).
QMatrix mult_matrix(const GVector& g, std::int64_t nu, const ToricAlgebra& alg);

}  // namespace toricrep
