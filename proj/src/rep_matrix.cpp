#include "toricrep/rep_matrix.hpp"

namespace toricrep {

P3Point P3Point::of(std::array<Rational, 4> c) {
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (!is_zero(c[i])) {
      lead = i;
      break;
    }
  if (lead < 0) throw InputError("projective point with all coordinates zero");
  const Rational scale = c[lead];
  for (int i = 0; i < 4; ++i) c[i] /= scale;
  return P3Point{std::move(c)};
}

RepMatrix build_rep_matrix(const ComplexContext& ctx, std::int64_t nu0) {
  const std::int64_t d = ctx.d();
  const QMatrix& k1 = ctx.koszul_matrix(1, nu0 + d);
  const QMatrix kernel = nullspace_basis(k1);
  if (kernel.cols() == 0)
    throw MathError("no linear syzygies in degree " + std::to_string(nu0 + d) +
                    ": degenerate parametrization");
  const Index r0 = ctx.algebra().dim(nu0);

  RepMatrix m;
  m.row_basis = ctx.algebra().basis(nu0);
  m.nu0 = nu0;
  m.d = d;
  m.polytope = ctx.algebra().polytope();
  m.g = ctx.g();
  for (int i = 0; i < 4; ++i) m.coeff[i] = kernel.middleRows(i * r0, r0);
  return m;
}

QMatrix evaluate(const RepMatrix& m, const P3Point& p) {
  QMatrix out = QMatrix::Zero(m.rows(), m.cols());
  for (int i = 0; i < 4; ++i) {
    if (is_zero(p.coord[i])) continue;
    out += p.coord[i] * m.coeff[i];
  }
  return out;
}

RankResult rank_at(const RepMatrix& m, const P3Point& p) {
  RankResult res;
  res.rank = rank(evaluate(m, p));
  res.is_member = res.rank < m.rows();
  return res;
}

}  // namespace toricrep
