#include "hc/matrix.hpp"

#include <vector>

namespace hc {

Rational exact_det(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: matrix not square");
  const long n = m.rows();
  if (n == 0) return 1;

  // Scale each row to integers, remembering the divisor.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer divisor = 1;
  for (long i = 0; i < n; ++i) {
    Integer lcm = 1;
    for (long j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                         m(i, j).get_den().get_mpz_t());
    for (long j = 0; j < n; ++j) {
      Rational v = m(i, j) * lcm;
      a[i][j] = v.get_num();
    }
    divisor *= lcm;
  }

  Integer prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      long pivot = -1;
      for (long i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        Integer num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign, divisor);
  det.canonicalize();
  return det;
}

ExactMatrix exact_inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_inverse: matrix not square");
  const long n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::Zero(n, n);
  for (long i = 0; i < n; ++i) inv(i, i) = 1;
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long i = col; i < n; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw SingularMatrixError("exact_inverse: singular matrix");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    Rational p = a(col, col);
    for (long j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (long i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (long j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

ExactMatrix to_exact(const IntMatrix& m) {
  ExactMatrix r(m.rows(), m.cols());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

}  // namespace hc
