#pragma once

#include <vector>

#include "toricrep/eigen_support.hpp"

namespace toricrep {

// Exact rank over Q (fraction-free elimination on a denominator-cleared copy).
Index rank(const QMatrix& m);

// Exact determinant via Bareiss elimination. Throws InputError on non-square.
Rational det(const QMatrix& m);

// Canonical kernel basis, one column per free column of the reduced echelon
// form in increasing index order; each vector is scaled so that its first
// nonzero coordinate is 1. Result is cols(m) x nullity (possibly 0 columns).
QMatrix nullspace_basis(const QMatrix& m);

// Generic elimination over a field; used for the opt-in modular fast path.
template <typename Scalar>
Index rank_field(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  const Index rows = a.rows(), cols = a.cols();
  const Scalar zero{};
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index piv = -1;
    for (Index i = row; i < rows; ++i)
      if (!(a(i, col) == zero)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    for (Index i = row + 1; i < rows; ++i) {
      if (a(i, col) == zero) continue;
      const Scalar f = a(i, col) / a(row, col);
      for (Index j = col; j < cols; ++j) a(i, j) -= f * a(row, j);
    }
    ++row;
  }
  return row;
}

// Rank modulo the session prime. Probabilistic: a rank over a random prime
// is a lower bound for the rank over Q.
Index rank_mod_p(const QMatrix& m);

namespace detail {

// Row-scaled integer copy: each row multiplied by the lcm of its entry
// denominators. Rank and kernel are unchanged; det picks up prod(scales).
ZMatrix clear_denominators(const QMatrix& m, std::vector<Int>* row_scales = nullptr);

struct Echelon {
  std::vector<Index> pivot_cols;
  int sign = 1;  // parity of the row permutation
};

// In-place fraction-free elimination to an upper staircase form.
Echelon bareiss_echelon(ZMatrix& a);

}  // namespace detail

}  // namespace toricrep
