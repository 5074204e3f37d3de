#pragma once

// Exact dense linear algebra for tiny matrices (k <= ~10).

#include <optional>

#include <Eigen/Core>

#include "perfcol/numeric.hpp"
#include "perfcol/polynomial.hpp"

namespace perfcol {

/// det(xI - A) by Faddeev-LeVerrier.  Over the integers every division by k
/// is exact, so Scalar may be BigInt.
template <typename Derived>
Polynomial<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = 1;
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(n, n);
  const DenseMatrix<Scalar> identity = DenseMatrix<Scalar>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = (a * m).eval() + identity * c[n - k + 1];
    const Scalar trace = (a * m).trace();
    c[n - k] = -trace / Scalar(k);
  }
  return Polynomial<Scalar>(std::move(c));
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& a, int t) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(a.rows(), a.cols());
  for (int i = 0; i < t; ++i) result = (result * a).eval();
  return result;
}

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

template <typename Field>
struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  DenseVector<Field> solution;
};

/// Gaussian elimination over an exact field for a possibly rectangular
/// system A x = b.  Reports a unique solution, inconsistency, or a
/// non-trivial kernel.
template <typename DerivedA, typename DerivedB>
SolveResult<typename DerivedA::Scalar> solve_exact(const Eigen::MatrixBase<DerivedA>& a,
                                                   const Eigen::MatrixBase<DerivedB>& b) {
  using Field = typename DerivedA::Scalar;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  DenseMatrix<Field> m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;

  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_col;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    m.row(pivot).swap(m.row(rank));
    const Field inv = Field(1) / m(rank, col);
    m.row(rank) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != rank && m(r, col) != 0) {
        const Field factor = m(r, col);
        m.row(r) -= factor * m.row(rank);
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  SolveResult<Field> result;
  for (Eigen::Index r = rank; r < rows; ++r) {
    if (m(r, cols) != 0) return result;
  }
  if (rank < cols) {
    result.status = SolveStatus::Underdetermined;
    return result;
  }
  result.status = SolveStatus::Unique;
  result.solution = DenseVector<Field>::Zero(cols);
  for (Eigen::Index r = 0; r < rank; ++r) result.solution(pivot_col[r]) = m(r, cols);
  return result;
}

}  // namespace perfcol
