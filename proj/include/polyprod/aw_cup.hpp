#pragma once

#include "polyprod/ring.hpp"

namespace polyprod {

// Independent cup-product oracle on the plain simplicial cochains of L: the
// front/back face coproduct ψ({i_1,...,i_n}) = Σ_k front_k ⊗ back_k dualized,
// (x∪y)(τ) = x(τ|first p+1) · y(τ|last q+1). Returns a single-block table on
// H^*(L) in the canonical cocycle basis.
template <typename F>
AlgebraTable<F> aw_cup_product(const SimplicialComplex& l,
                               const typename FieldOps<F>::Ctx& ctx) {
  if (l.is_void()) throw InputError("aw_cup_product: L must be non-void");
  ChainComplex chain = simplicial_chain(l, ChainVariant::plain);

  // cohomology bases per degree
  std::vector<SubquotientBasis<F>> h(static_cast<size_t>(std::max(0, chain.degrees())));
  for (int d = chain.lo; d <= chain.hi(); ++d) {
    Index n = chain.dim(d);
    if (n == 0) continue;
    Matrix<F> cocycles, cobounds;
    if (const MatrixZ* up = chain.boundary_at(d + 1); up && up->cols() > 0)
      cocycles = nullspace(Matrix<F>(to_field<F>(*up, ctx).transpose()));
    else
      cocycles = Matrix<F>::Identity(n, n);
    if (const MatrixZ* down = chain.boundary_at(d); down && down->rows() > 0)
      cobounds = to_field<F>(*down, ctx).transpose();
    else
      cobounds = Matrix<F>::Zero(n, 0);
    h[static_cast<size_t>(d - chain.lo)] = SubquotientBasis<F>(cocycles, cobounds);
  }

  AlgebraTable<F> t;
  struct Loc {
    int degree;
    Index local;
  };
  std::vector<Loc> locs;
  for (int d = chain.lo; d <= chain.hi(); ++d) {
    if (chain.dim(d) == 0) continue;
    const auto& basis = h[static_cast<size_t>(d - chain.lo)];
    for (Index i = 0; i < basis.dim(); ++i) {
      typename AlgebraTable<F>::Elem e;
      e.degree = d;
      e.label = "H^" + std::to_string(d) + "." + std::to_string(i);
      t.basis.push_back(std::move(e));
      locs.push_back({d, i});
    }
  }

  auto label_pos = [&](int d, Mask f) -> Index {
    if (d < chain.lo || d > chain.hi()) return -1;
    const auto& labels = chain.labels[static_cast<size_t>(d - chain.lo)];
    auto it = std::lower_bound(labels.begin(), labels.end(), f);
    return (it != labels.end() && *it == f) ? static_cast<Index>(it - labels.begin()) : -1;
  };

  for (Index i = 0; i < static_cast<Index>(t.basis.size()); ++i)
    for (Index j = 0; j < static_cast<Index>(t.basis.size()); ++j) {
      int p = locs[static_cast<size_t>(i)].degree, q = locs[static_cast<size_t>(j)].degree;
      int target = p + q;
      if (target > chain.hi()) continue;
      if (chain.dim(target) == 0) continue;
      Vector<F> x =
          h[static_cast<size_t>(p - chain.lo)].reps().col(locs[static_cast<size_t>(i)].local);
      Vector<F> y =
          h[static_cast<size_t>(q - chain.lo)].reps().col(locs[static_cast<size_t>(j)].local);
      Vector<F> w = Vector<F>::Zero(chain.dim(target));
      const auto& labels = chain.labels[static_cast<size_t>(target - chain.lo)];
      for (Index c = 0; c < w.size(); ++c) {
        std::vector<int> verts = vertices_of(labels[static_cast<size_t>(c)]);
        Mask front = 0, back = 0;
        for (int v = 0; v <= p; ++v) front |= bit(verts[static_cast<size_t>(v)]);
        for (int v = p; v <= p + q; ++v) back |= bit(verts[static_cast<size_t>(v)]);
        Index fi = label_pos(p, front), bi = label_pos(q, back);
        if (fi < 0 || bi < 0) continue;
        w(c) = x(fi) * y(bi);
      }
      Vector<F> coords = h[static_cast<size_t>(target - chain.lo)].coords(w);
      std::vector<std::pair<Index, F>> vals;
      for (Index c = 0; c < coords.size(); ++c) {
        if (coords(c).is_zero()) continue;
        for (Index kk = 0; kk < static_cast<Index>(t.basis.size()); ++kk)
          if (locs[static_cast<size_t>(kk)].degree == target &&
              locs[static_cast<size_t>(kk)].local == c)
            vals.emplace_back(kk, coords(c));
      }
      if (!vals.empty()) t.constants[{i, j}] = std::move(vals);
    }
  return t;
}

}  // namespace polyprod
