#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "lsa/errors.hpp"
#include "lsa/rational.hpp"

namespace lsa {

using Eigen::Index;

/// Dense row-major matrix over an exact scalar. Row-major so the row
/// operations of Gaussian elimination touch contiguous memory.
template <typename Scalar>
using DenseMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rational>;
using RatVector = DenseVector<Rational>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename Scalar>
struct RrefResult {
  DenseMatrix<Scalar> reduced;
  Index rank = 0;
  std::vector<Index> pivot_cols;
};

/// Unique reduced row-echelon form. The pivot of each step is the first
/// nonzero entry scanning left to right, top to bottom; division is exact,
/// so no magnitude pivoting is involved and the output is canonical.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out;
  DenseMatrix<Scalar>& m = out.reduced;
  m = input;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    if (m(r, c) != 1) {
      const Scalar inv = m(r, c);
      for (Index j = c; j < cols; ++j)
        if (m(r, j) != 0) m(r, j) /= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar factor = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

/// Canonical basis of a subspace: rows in reduced row-echelon form, pivots 1,
/// zeros above and below every pivot, no zero rows. Two values represent the
/// same subspace iff their row matrices are identical.
template <typename Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Index ambient_dim)
      : ambient_dim_(ambient_dim), rows_(0, ambient_dim) {}

  /// Canonicalizes an arbitrary spanning set (rows) via rref.
  template <typename Derived>
  EchelonBasis(Index ambient_dim, const Eigen::MatrixBase<Derived>& spanning_rows)
      : ambient_dim_(ambient_dim) {
    if (spanning_rows.cols() != ambient_dim)
      throw InputError("spanning rows have wrong ambient dimension");
    auto r = rref(spanning_rows);
    rows_ = r.reduced.topRows(r.rank);
    pivot_cols_ = std::move(r.pivot_cols);
  }

  static EchelonBasis zero(Index ambient_dim) { return EchelonBasis(ambient_dim); }

  static EchelonBasis full(Index ambient_dim) {
    return EchelonBasis(ambient_dim,
                        DenseMatrix<Scalar>::Identity(ambient_dim, ambient_dim));
  }

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return rows_.rows(); }
  const DenseMatrix<Scalar>& rows() const { return rows_; }
  const std::vector<Index>& pivot_cols() const { return pivot_cols_; }

  /// Residual of v after eliminating every pivot coordinate against the
  /// basis rows. Zero iff v lies in the subspace.
  DenseVector<Scalar> reduce(const DenseVector<Scalar>& v) const {
    if (v.size() != ambient_dim_)
      throw InputError("vector has wrong ambient dimension");
    DenseVector<Scalar> w = v;
    for (Index r = 0; r < rows_.rows(); ++r) {
      const Scalar coeff = w(pivot_cols_[r]);
      if (coeff == 0) continue;
      for (Index j = pivot_cols_[r]; j < ambient_dim_; ++j)
        if (rows_(r, j) != 0) w(j) -= coeff * rows_(r, j);
    }
    return w;
  }

  bool contains(const DenseVector<Scalar>& v) const { return is_zero(reduce(v)); }

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rows_.rows() == b.rows_.rows() &&
           a.rows_ == b.rows_;
  }

 private:
  Index ambient_dim_;
  DenseMatrix<Scalar> rows_;
  std::vector<Index> pivot_cols_;
};

using Subspace = EchelonBasis<Rational>;

/// Canonical basis of {v : m v = 0}; dimension is cols(m) - rank(m).
template <typename Derived>
EchelonBasis<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index cols = m.cols();
  auto r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (Index c : r.pivot_cols) is_pivot[c] = true;
  const Index nfree = cols - r.rank;
  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(nfree, cols);
  Index row = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    basis(row, f) = 1;
    for (Index i = 0; i < r.rank; ++i) basis(row, r.pivot_cols[i]) = -r.reduced(i, f);
    ++row;
  }
  return EchelonBasis<Scalar>(cols, basis);
}

/// Some particular solution of a x = b (free variables set to zero), or
/// nullopt when the system is inconsistent.
template <typename Scalar>
std::optional<DenseVector<Scalar>> solve(const DenseMatrix<Scalar>& a,
                                         const DenseVector<Scalar>& b) {
  if (a.rows() != b.size()) throw InputError("solve: dimension mismatch");
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto r = rref(aug);
  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(a.cols());
  for (Index i = 0; i < r.rank; ++i) {
    if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // 0 = 1 row
    x(r.pivot_cols[i]) = r.reduced(i, a.cols());
  }
  return x;
}

template <typename Scalar>
bool subspace_contains(const EchelonBasis<Scalar>& s, const DenseVector<Scalar>& v) {
  return s.contains(v);
}

/// Canonical basis of s1 + s2.
template <typename Scalar>
EchelonBasis<Scalar> subspace_sum(const EchelonBasis<Scalar>& s1,
                                  const EchelonBasis<Scalar>& s2) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw InputError("subspace_sum: ambient dimensions differ");
  DenseMatrix<Scalar> stacked(s1.dim() + s2.dim(), s1.ambient_dim());
  stacked.topRows(s1.dim()) = s1.rows();
  stacked.bottomRows(s2.dim()) = s2.rows();
  return EchelonBasis<Scalar>(s1.ambient_dim(), stacked);
}

}  // namespace lsa
