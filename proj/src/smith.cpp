#include <algorithm>

#include "polyprod/linalg.hpp"

namespace polyprod {

namespace {

struct Worker {
  MatrixZ& d;
  bool track;
  MatrixZ U, Uinv, V, Vinv;

  explicit Worker(MatrixZ& m, bool with_transforms) : d(m), track(with_transforms) {
    if (track) {
      U = MatrixZ::Identity(d.rows(), d.rows());
      Uinv = U;
      V = MatrixZ::Identity(d.cols(), d.cols());
      Vinv = V;
    }
  }

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    if (track) {
      U.row(i).swap(U.row(j));
      Uinv.col(i).swap(Uinv.col(j));
    }
  }
  void swap_cols(Index i, Index j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    if (track) {
      V.col(i).swap(V.col(j));
      Vinv.row(i).swap(Vinv.row(j));
    }
  }
  // row_i += q * row_j
  void add_row(Index i, Index j, const ZZ& q) {
    if (q.is_zero()) return;
    d.row(i) += q * d.row(j);
    if (track) {
      U.row(i) += q * U.row(j);
      Uinv.col(j) -= q * Uinv.col(i);
    }
  }
  // col_i += q * col_j
  void add_col(Index i, Index j, const ZZ& q) {
    if (q.is_zero()) return;
    d.col(i) += q * d.col(j);
    if (track) {
      V.col(i) += q * V.col(j);
      Vinv.row(j) -= q * Vinv.row(i);
    }
  }
  void negate_row(Index i) {
    d.row(i) = -d.row(i);
    if (track) {
      U.row(i) = -U.row(i);
      Uinv.col(i) = -Uinv.col(i);
    }
  }
};

}  // namespace

namespace {

// Unit-pivot shrinking on an int64 copy: boundary-style matrices reduce almost
// entirely with ±1 pivots, leaving a small core for the full algorithm.
// Returns false when an intermediate value would overflow.
bool unit_pivot_shrink(const MatrixZ& a, Index& units, MatrixZ& core) {
  const Index rows = a.rows(), cols = a.cols();
  std::vector<std::vector<long long>> m(static_cast<size_t>(rows),
                                        std::vector<long long>(static_cast<size_t>(cols)));
  constexpr long long kBig = (1LL << 62);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const ZZ& v = a(i, j);
      if (v > ZZ(kBig) || v < ZZ(-kBig)) return false;
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<long long>(v.v);
    }
  std::vector<Index> live_rows(static_cast<size_t>(rows)), live_cols(static_cast<size_t>(cols));
  for (Index i = 0; i < rows; ++i) live_rows[static_cast<size_t>(i)] = i;
  for (Index j = 0; j < cols; ++j) live_cols[static_cast<size_t>(j)] = j;
  Index nr = rows, nc = cols;
  units = 0;

  auto at = [&](Index i, Index j) -> long long& {
    return m[static_cast<size_t>(live_rows[static_cast<size_t>(i)])]
            [static_cast<size_t>(live_cols[static_cast<size_t>(j)])];
  };

  while (true) {
    Index pi = -1, pj = -1;
    for (Index i = 0; i < nr && pi < 0; ++i)
      for (Index j = 0; j < nc; ++j)
        if (at(i, j) == 1 || at(i, j) == -1) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    const long long piv = at(pi, pj);
    for (Index i = 0; i < nr; ++i) {
      if (i == pi) continue;
      long long f = at(i, pj);
      if (f == 0) continue;
      // row_i -= (f/piv) * row_pi ; piv = ±1
      long long q = f * piv;
      for (Index j = 0; j < nc; ++j) {
        __int128 nv = static_cast<__int128>(at(i, j)) - static_cast<__int128>(q) * at(pi, j);
        if (nv > kBig || nv < -kBig) return false;
        at(i, j) = static_cast<long long>(nv);
      }
    }
    // the column is clear; the pivot row no longer matters for the factors
    ++units;
    std::swap(live_rows[static_cast<size_t>(pi)], live_rows[static_cast<size_t>(nr - 1)]);
    std::swap(live_cols[static_cast<size_t>(pj)], live_cols[static_cast<size_t>(nc - 1)]);
    --nr;
    --nc;
  }
  core = MatrixZ::Zero(nr, nc);
  for (Index i = 0; i < nr; ++i)
    for (Index j = 0; j < nc; ++j) core(i, j) = ZZ(at(i, j));
  return true;
}

}  // namespace

SmithResult smith_full(MatrixZ a, bool with_transforms);

SmithResult smith_normal_form(MatrixZ a, bool with_transforms) {
  if (!with_transforms) {
    Index units = 0;
    MatrixZ core;
    if (unit_pivot_shrink(a, units, core)) {
      SmithResult res;
      if (core.rows() > 0 && core.cols() > 0) {
        SmithResult inner = smith_full(std::move(core), false);
        res.factors.assign(static_cast<size_t>(units), ZZ(1));
        res.factors.insert(res.factors.end(), inner.factors.begin(), inner.factors.end());
      } else {
        res.factors.assign(static_cast<size_t>(units), ZZ(1));
      }
      res.rank = static_cast<Index>(res.factors.size());
      res.diagonal = MatrixZ::Zero(a.rows(), a.cols());
      for (Index t = 0; t < res.rank; ++t) res.diagonal(t, t) = res.factors[static_cast<size_t>(t)];
      return res;
    }
  }
  return smith_full(std::move(a), with_transforms);
}

SmithResult smith_full(MatrixZ a, bool with_transforms) {
  const Index rows = a.rows(), cols = a.cols();
  Worker w(a, with_transforms);
  const Index steps = std::min(rows, cols);

  for (Index t = 0; t < steps; ++t) {
    // smallest-nonzero-pivot selection keeps entry growth in check
    Index pi = -1, pj = -1;
    ZZ best(0);
    for (Index j = t; j < cols; ++j)
      for (Index i = t; i < rows; ++i) {
        if (a(i, j).is_zero()) continue;
        ZZ mag = abs(a(i, j));
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    while (true) {
      bool dirty = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        w.add_row(i, t, -quot(a(i, t), a(t, t)));
        if (!a(i, t).is_zero()) dirty = true;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        w.add_col(j, t, -quot(a(t, j), a(t, t)));
        if (!a(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        // remainders are strictly smaller than the pivot; promote the smallest
        Index ni = t, nj = t;
        ZZ mag = abs(a(t, t));
        for (Index i = t; i < rows; ++i)
          for (Index j = t; j < cols; ++j) {
            if (a(i, j).is_zero()) continue;
            ZZ m2 = abs(a(i, j));
            if (m2 < mag) {
              mag = m2;
              ni = i;
              nj = j;
            }
          }
        w.swap_rows(t, ni);
        w.swap_cols(t, nj);
        continue;
      }
      // row/col t clean; enforce that the pivot divides the rest
      bool fixed = true;
      for (Index i = t + 1; i < rows && fixed; ++i)
        for (Index j = t + 1; j < cols && fixed; ++j)
          if (!divides(a(t, t), a(i, j))) {
            w.add_row(t, i, ZZ(1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (a(t, t) < ZZ(0)) w.negate_row(t);
  }

  SmithResult res;
  res.diagonal = a;
  for (Index t = 0; t < steps; ++t) {
    if (a(t, t).is_zero()) break;
    res.factors.push_back(a(t, t));
  }
  res.rank = static_cast<Index>(res.factors.size());
  for (size_t i = 1; i < res.factors.size(); ++i)
    POLYPROD_CHECK(divides(res.factors[i - 1], res.factors[i]),
                   "smith_normal_form: broken divisibility chain");
  if (with_transforms) {
    res.U = std::move(w.U);
    res.Uinv = std::move(w.Uinv);
    res.V = std::move(w.V);
    res.Vinv = std::move(w.Vinv);
    res.has_transforms = true;
  }
  return res;
}

Index rank_z(const MatrixZ& a) { return smith_normal_form(a, false).rank; }

}  // namespace polyprod
