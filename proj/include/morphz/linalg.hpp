#pragma once

// Exact dense linear algebra over the integers: Smith normal form with
// unimodular transforms, integer kernel bases, fraction-free determinants.
// Free functions accept arbitrary Eigen expressions and are templated on the
// scalar type; the rest of morphz instantiates them with Int (mpz_class), so
// nothing here ever overflows.

#include "morphz/numeric.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace morphz {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

// Result of snf(a): u * a * v = s with u, v unimodular and s diagonal.
// Diagonal entries are nonnegative, each divides the next, zeros trail.
template <class Scalar>
struct SmithResult {
  DenseMatrix<Scalar> u, s, v;

  Eigen::Index rank() const {
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(s.rows(), s.cols());
    while (r < n && s(r, r) != Scalar(0)) ++r;
    return r;
  }

  std::vector<Scalar> diagonal() const {
    const Eigen::Index n = std::min(s.rows(), s.cols());
    std::vector<Scalar> d;
    d.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) d.push_back(s(i, i));
    return d;
  }
};

namespace detail {

// Locate the nonzero entry of least magnitude in the block of m at (t, t) and
// below/right; ties break toward the lowest row, then the lowest column.
// Returns false when that block is entirely zero.
template <class Scalar>
bool trailing_min_pivot(const DenseMatrix<Scalar>& m, Eigen::Index t,
                        Eigen::Index* pi, Eigen::Index* pj) {
  bool found = false;
  Scalar best{};
  for (Eigen::Index i = t; i < m.rows(); ++i) {
    for (Eigen::Index j = t; j < m.cols(); ++j) {
      if (m(i, j) == Scalar(0)) continue;
      Scalar mag = m(i, j) < Scalar(0) ? Scalar(-m(i, j)) : Scalar(m(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        *pi = i;
        *pj = j;
      }
    }
  }
  return found;
}

}  // namespace detail

// Smith normal form by repeated division steps.  The pivot choice (least
// magnitude, lowest row then column on ties) and the fixed sweep order make
// the output deterministic for a given input.  Sign normalization of the
// diagonal is absorbed into u.
template <class Derived>
SmithResult<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Mat = DenseMatrix<Scalar>;
  using Eigen::Index;

  SmithResult<Scalar> res;
  res.s = a;
  res.u = Mat::Identity(a.rows(), a.rows());
  res.v = Mat::Identity(a.cols(), a.cols());
  Mat& s = res.s;

  const Index n = std::min(s.rows(), s.cols());
  for (Index t = 0; t < n; ++t) {
    Index pi = t, pj = t;
    if (!detail::trailing_min_pivot(s, t, &pi, &pj)) break;  // rest is zero

    for (;;) {
      // Seat the current least-magnitude entry at (t, t).
      if (pi != t) {
        s.row(pi).swap(s.row(t));
        res.u.row(pi).swap(res.u.row(t));
      }
      if (pj != t) {
        s.col(pj).swap(s.col(t));
        res.v.col(pj).swap(res.v.col(t));
      }

      // One sweep of division steps down the column, then across the row.
      // Truncated division leaves remainders strictly smaller in magnitude
      // than the pivot, so a dirty sweep re-runs with a strictly smaller
      // pivot and the loop terminates.
      bool dirty = false;
      for (Index i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == Scalar(0)) continue;
        Scalar q = Scalar(s(i, t) / s(t, t));
        if (q != Scalar(0)) {
          s.row(i) -= s.row(t) * q;
          res.u.row(i) -= res.u.row(t) * q;
        }
        if (s(i, t) != Scalar(0)) dirty = true;
      }
      for (Index j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == Scalar(0)) continue;
        Scalar q = Scalar(s(t, j) / s(t, t));
        if (q != Scalar(0)) {
          s.col(j) -= s.col(t) * q;
          res.v.col(j) -= res.v.col(t) * q;
        }
        if (s(t, j) != Scalar(0)) dirty = true;
      }
      if (dirty) {
        detail::trailing_min_pivot(s, t, &pi, &pj);
        continue;
      }

      // Row and column are clean.  Enforce divisibility into the trailing
      // block: fold the first offending row into the pivot row, which the
      // next sweep reduces to a strictly smaller pivot.
      Index bi = -1;
      for (Index i = t + 1; i < s.rows() && bi < 0; ++i) {
        for (Index j = t + 1; j < s.cols(); ++j) {
          if (s(i, j) % s(t, t) != Scalar(0)) {
            bi = i;
            break;
          }
        }
      }
      if (bi < 0) break;
      s.row(t) += s.row(bi);
      res.u.row(t) += res.u.row(bi);
      detail::trailing_min_pivot(s, t, &pi, &pj);
    }

    if (s(t, t) < Scalar(0)) {
      s.row(t) *= Scalar(-1);
      res.u.row(t) *= Scalar(-1);
    }
  }
  return res;
}

// Basis of { x : a x = 0 } as matrix columns.  Unimodularity of v makes the
// basis primitive (it extends to a basis of the full lattice).
template <class Derived>
DenseMatrix<typename Derived::Scalar> integer_kernel(const Eigen::MatrixBase<Derived>& a) {
  auto res = snf(a);
  return res.v.rightCols(a.cols() - res.rank());
}

// Checked product: dimension mismatches throw instead of tripping Eigen's
// assert-and-abort.
template <class DA, class DB>
DenseMatrix<typename DA::Scalar> mat_mul(const Eigen::MatrixBase<DA>& a,
                                         const Eigen::MatrixBase<DB>& b) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>,
                "mat_mul requires matching scalar types");
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul shape mismatch: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  return a.derived() * b.derived();
}

// Fraction-free (Bareiss) determinant; every interior division is exact.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Eigen::Index;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);

  DenseMatrix<Scalar> m = a;
  Scalar sign(1), prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n && swap_row < 0; ++i)
        if (m(i, k) != Scalar(0)) swap_row = i;
      if (swap_row < 0) return Scalar(0);
      m.row(k).swap(m.row(swap_row));
      sign *= Scalar(-1);
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar t = Scalar((m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev);
        m(i, j) = t;
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return Scalar(sign * m(n - 1, n - 1));
}

template <class Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) return false;
  Scalar d = determinant(a);
  return d == Scalar(1) || d == Scalar(-1);
}

template <class Scalar>
DenseMatrix<Scalar> diagonal_matrix(const std::vector<Scalar>& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

template <class DA, class DB>
DenseMatrix<typename DA::Scalar> hcat(const Eigen::MatrixBase<DA>& a,
                                      const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  DenseMatrix<typename DA::Scalar> m(a.rows(), a.cols() + b.cols());
  m.leftCols(a.cols()) = a;
  m.rightCols(b.cols()) = b;
  return m;
}

}  // namespace morphz
