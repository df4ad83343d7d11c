#include "toricrep/linalg.hpp"

#include "toricrep/common.hpp"

namespace toricrep {

namespace detail {

ZMatrix clear_denominators(const QMatrix& m, std::vector<Int>* row_scales) {
  ZMatrix out(m.rows(), m.cols());
  Int lcm, q;
  for (Index i = 0; i < m.rows(); ++i) {
    lcm = 1;
    for (Index j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (Index j = 0; j < m.cols(); ++j) {
      mpz_divexact(q.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
      out(i, j) = m(i, j).get_num() * q;
    }
    if (row_scales) row_scales->push_back(lcm);
  }
  return out;
}

Echelon bareiss_echelon(ZMatrix& a) {
  const Index rows = a.rows(), cols = a.cols();
  Echelon res;
  Int prev(1), t1, t2;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index piv = -1;
    for (Index i = row; i < rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      a.row(piv).swap(a.row(row));
      res.sign = -res.sign;
    }
    for (Index i = row + 1; i < rows; ++i) {
      if (a(i, col) == 0) {
        for (Index j = col + 1; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          mpz_mul(t1.get_mpz_t(), a(i, j).get_mpz_t(), a(row, col).get_mpz_t());
          mpz_divexact(a(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
      } else {
        for (Index j = col + 1; j < cols; ++j) {
          mpz_mul(t1.get_mpz_t(), a(i, j).get_mpz_t(), a(row, col).get_mpz_t());
          mpz_mul(t2.get_mpz_t(), a(i, col).get_mpz_t(), a(row, j).get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
          mpz_divexact(a(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
        a(i, col) = 0;
      }
    }
    prev = a(row, col);
    res.pivot_cols.push_back(col);
    ++row;
  }
  return res;
}

}  // namespace detail

Index rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  ZMatrix a = detail::clear_denominators(m);
  return static_cast<Index>(detail::bareiss_echelon(a).pivot_cols.size());
}

Rational det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<Int> scales;
  ZMatrix a = detail::clear_denominators(m, &scales);
  const detail::Echelon ech = detail::bareiss_echelon(a);
  if (static_cast<Index>(ech.pivot_cols.size()) < n) return Rational(0);
  Int num = a(n - 1, n - 1);
  if (ech.sign < 0) num = -num;
  Int den(1);
  for (const Int& s : scales) den *= s;
  Rational d(num, den);
  d.canonicalize();
  return d;
}

QMatrix nullspace_basis(const QMatrix& m) {
  const Index cols = m.cols();
  if (cols == 0) return QMatrix(0, 0);
  if (m.rows() == 0) {
    QMatrix basis = QMatrix::Zero(cols, cols);
    for (Index j = 0; j < cols; ++j) basis(j, j) = Rational(1);
    return basis;
  }
  ZMatrix a = detail::clear_denominators(m);
  const detail::Echelon ech = detail::bareiss_echelon(a);
  const auto& piv = ech.pivot_cols;
  const Index r = static_cast<Index>(piv.size());

  std::vector<char> is_pivot(cols, 0);
  for (Index p : piv) is_pivot[p] = 1;

  QMatrix basis(cols, cols - r);
  Index out = 0;
  QVector v(cols);
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    for (Index j = 0; j < cols; ++j) v(j) = Rational(0);
    v(f) = Rational(1);
    // back-substitute the pivot coordinates, bottom row first
    for (Index i = r - 1; i >= 0; --i) {
      Rational acc(0);
      for (Index j = piv[i] + 1; j < cols; ++j) {
        if (a(i, j) == 0 || is_zero(v(j))) continue;
        acc += Rational(a(i, j)) * v(j);
      }
      v(piv[i]) = -acc / Rational(a(i, piv[i]));
    }
    // scale so the first nonzero coordinate is 1
    for (Index j = 0; j < cols; ++j) {
      if (!is_zero(v(j))) {
        const Rational lead = v(j);
        for (Index k = j; k < cols; ++k) v(k) /= lead;
        break;
      }
    }
    basis.col(out++) = v;
  }
  return basis;
}

Index rank_mod_p(const QMatrix& m) { return rank_field<PrimeScalar>(reduce_mod_p(m)); }

PMatrix reduce_mod_p(const QMatrix& m) {
  PMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = PrimeScalar::from_rational(m(i, j));
  return out;
}

}  // namespace toricrep
