#include "toricrep/toric.hpp"

#include <mutex>
#include <sstream>

namespace toricrep {

struct ToricAlgebra::Cache {
  std::mutex mu;
  std::map<std::int64_t, GradedBasis> bases;
};

ToricAlgebra::ToricAlgebra(LatticePolytope q)
    : q_(std::move(q)), cache_(std::make_shared<Cache>()) {
  if (q_.degenerate())
    throw MathError("toric algebra requires a 2-dimensional polytope");
}

const GradedBasis& ToricAlgebra::basis(std::int64_t n) const {
  if (n < 0) throw InputError("graded basis of negative degree");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->bases.find(n);
  if (it != cache_->bases.end()) return it->second;
  GradedBasis b;
  b.degree = n;
  b.points = n == 0 ? PointList({{0, 0}}) : lattice_points(q_, n);
  return cache_->bases.emplace(n, std::move(b)).first->second;
}

Index ToricAlgebra::dim(std::int64_t n) const {
  if (n < 0) return 0;
  return static_cast<Index>(basis(n).points.size());
}

GVector::GVector(std::int64_t degree, std::map<Point2, Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (is_zero(it->second))
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

ParamPoly GVector::to_param_poly() const {
  ParamPoly::TermMap terms;
  for (const auto& [pt, c] : coeffs_) terms[pt] = c;
  return ParamPoly(std::move(terms));
}

std::array<GVector, 4> reparametrize(const std::array<ParamPoly, 4>& fs,
                                     const LatticePolytope& q, std::int64_t d) {
  if (d < 1) throw InputError("reparametrization degree must be >= 1");
  const LatticePolytope dq = q.scaled(d);
  std::array<GVector, 4> out;
  for (int i = 0; i < 4; ++i) {
    std::map<Point2, Rational> coeffs;
    for (const auto& [e, c] : fs[i].terms()) {
      if (!dq.contains(e)) {
        std::ostringstream msg;
        msg << "support of f" << (i + 1) << " leaves " << d
            << "*Q at exponent (" << e[0] << "," << e[1] << ")";
        throw MathError(msg.str());
      }
      coeffs[e] = c;
    }
    out[i] = GVector(d, std::move(coeffs));
  }
  if (out[0].is_zero() && out[1].is_zero() && out[2].is_zero() && out[3].is_zero())
    throw MathError("all four coordinates are zero");
  return out;
}

QMatrix mult_matrix(const GVector& g, std::int64_t nu, const ToricAlgebra& alg) {
  if (nu < 0) throw InputError("multiplication matrix from negative degree");
  const GradedBasis& src = alg.basis(nu);
  const GradedBasis& tgt = alg.basis(nu + g.degree());
  QMatrix m = QMatrix::Zero(static_cast<Index>(tgt.points.size()),
                            static_cast<Index>(src.points.size()));
  for (std::size_t j = 0; j < src.points.size(); ++j) {
    const Point2 base = src.points[j];
    for (const auto& [pt, c] : g.coeffs()) {
      // Minkowski: nu*Q + d*Q = (nu+d)*Q, so base+pt is always a basis point
      const std::size_t i = tgt.points.index_of(base + pt);
      m(static_cast<Index>(i), static_cast<Index>(j)) += c;
    }
  }
  return m;
}

}  // namespace toricrep
