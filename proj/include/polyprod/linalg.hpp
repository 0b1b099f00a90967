#pragma once

#include <Eigen/Core>
#include <vector>

#include "polyprod/scalar.hpp"

namespace polyprod {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixZ = Matrix<ZZ>;
using VectorZ = Vector<ZZ>;
using Index = Eigen::Index;

// ---------------------------------------------------------------------------
// Smith normal form over Z: D = U * A * V with U, V unimodular and the
// diagonal entries nonnegative, each dividing the next. Fraction-free
// elimination with smallest-nonzero-pivot selection.
// ---------------------------------------------------------------------------
struct SmithResult {
  MatrixZ diagonal;            // same shape as the input
  std::vector<ZZ> factors;     // diag entries, zeros trimmed; d_i | d_{i+1}
  Index rank = 0;              // number of nonzero factors
  MatrixZ U, Uinv, V, Vinv;    // present when transforms were requested
  bool has_transforms = false;
};

SmithResult smith_normal_form(MatrixZ a, bool with_transforms = false);

Index rank_z(const MatrixZ& a);

// ---------------------------------------------------------------------------
// Field linear algebra, templated on the exact field scalar (QQ or Fp).
// ---------------------------------------------------------------------------

template <typename F>
Matrix<F> to_field(const MatrixZ& a, const typename FieldOps<F>::Ctx& ctx) {
  Matrix<F> out(a.rows(), a.cols());
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) out(i, j) = FieldOps<F>::from_int(a(i, j), ctx);
  return out;
}

// In-place reduced row echelon form; returns the pivot columns.
template <typename F>
std::vector<Index> rref_in_place(Matrix<F>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    F inv = m(row, col).inverse();
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      F f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
Index rank_f(Matrix<F> m) {
  return static_cast<Index>(rref_in_place(m).size());
}

// Canonical null-space basis from the RREF (free columns in ascending order).
template <typename F>
Matrix<F> nullspace(const Matrix<F>& m) {
  Matrix<F> r = m;
  std::vector<Index> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : pivots) is_pivot[c] = true;
  Index nfree = m.cols() - static_cast<Index>(pivots.size());
  Matrix<F> basis = Matrix<F>::Zero(m.cols(), nfree);
  Index k = 0;
  for (Index c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis(c, k) = F(1);
    for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i)
      basis(pivots[i], k) = -r(i, c);
    ++k;
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Canonical basis of a subquotient Z/B of a based free module, with a
// coordinate map for arbitrary elements of Z. Representatives come from the
// RREF over the ambient basis, pivots ascending, so they are reproducible
// across runs and platforms.
// ---------------------------------------------------------------------------
template <typename F>
class SubquotientBasis {
 public:
  SubquotientBasis() = default;

  // cycles: ambient x z, bounds: ambient x b, column spans with B <= Z.
  SubquotientBasis(const Matrix<F>& cycles, const Matrix<F>& bounds) {
    ambient_ = cycles.rows();
    std::vector<Vector<F>> reps;
    for (Index j = 0; j < bounds.cols(); ++j) {
      Vector<F> v = bounds.col(j);
      std::vector<F> expr;
      reduce(v, expr);
      if (!is_zero_vec(v)) insert(std::move(v), std::vector<F>{});
    }
    for (Index j = 0; j < cycles.cols(); ++j) {
      Vector<F> v = cycles.col(j);
      std::vector<F> expr;
      reduce(v, expr);
      if (is_zero_vec(v)) continue;
      // residual opens a new quotient dimension; by construction its class is
      // the new basis vector
      reps.push_back(v);
      std::vector<F> e(reps.size(), F(0));
      e.back() = F(1);
      insert(std::move(v), std::move(e));
    }
    reps_ = Matrix<F>::Zero(ambient_, static_cast<Index>(reps.size()));
    for (Index j = 0; j < reps_.cols(); ++j) reps_.col(j) = reps[static_cast<size_t>(j)];
  }

  Index dim() const { return reps_.cols(); }
  const Matrix<F>& reps() const { return reps_; }

  // Coordinates of [v] in the chosen basis; v must lie in Z + B (checked).
  Vector<F> coords(Vector<F> v) const {
    std::vector<F> expr;
    reduce(v, expr);
    if (!is_zero_vec(v))
      throw InvariantViolation("SubquotientBasis: vector outside the cycle space");
    Vector<F> out = Vector<F>::Zero(dim());
    for (Index i = 0; i < static_cast<Index>(expr.size()); ++i) out(i) = expr[static_cast<size_t>(i)];
    return out;
  }

 private:
  struct Row {
    Index pivot = 0;
    Vector<F> vec;
    std::vector<F> expr;  // class of vec in the chosen quotient basis
  };

  static bool is_zero_vec(const Vector<F>& v) {
    for (Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) return false;
    return true;
  }

  static void axpy_expr(std::vector<F>& acc, const F& c, const std::vector<F>& x) {
    if (x.size() > acc.size()) acc.resize(x.size(), F(0));
    for (size_t i = 0; i < x.size(); ++i) acc[i] += c * x[i];
  }

  // Jordan-complete echelon: every row vanishes at all other rows' pivots, so
  // a single pass fully reduces.
  void reduce(Vector<F>& v, std::vector<F>& expr) const {
    for (const Row& r : rows_) {
      if (v(r.pivot).is_zero()) continue;
      F c = v(r.pivot) / r.vec(r.pivot);
      v -= c * r.vec;
      axpy_expr(expr, c, r.expr);
    }
  }

  void insert(Vector<F> reduced, std::vector<F> expr) {
    Row r;
    r.pivot = 0;
    while (reduced(r.pivot).is_zero()) ++r.pivot;
    r.vec = std::move(reduced);
    r.expr = std::move(expr);
    for (Row& old : rows_) {
      if (old.vec(r.pivot).is_zero()) continue;
      F c = old.vec(r.pivot) / r.vec(r.pivot);
      old.vec -= c * r.vec;
      std::vector<F> neg(r.expr.size());
      for (size_t i = 0; i < r.expr.size(); ++i) neg[i] = -r.expr[i];
      axpy_expr(old.expr, c, neg);
    }
    rows_.push_back(std::move(r));
  }

  Index ambient_ = 0;
  Matrix<F> reps_;
  std::vector<Row> rows_;
};

}  // namespace polyprod
