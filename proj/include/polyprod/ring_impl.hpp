#pragma once

// Template implementations for ring.hpp.

namespace polyprod {

template <typename F>
BlockRing<F> make_block_ring(const SimplicialComplex& k, const IndexPair& p,
                             const typename FieldOps<F>::Ctx& ctx) {
  BlockRing<F> b;
  b.p = p;
  b.chain = suspended_local_chain(k, p);
  b.h.resize(static_cast<size_t>(b.chain.degrees()));
  for (int d = b.chain.lo; d <= b.chain.hi(); ++d) {
    Index n = b.chain.dim(d);
    if (n == 0) continue;
    // cochain degree d: cocycles = null(δ^d), coboundaries = im(δ^{d-1})
    Matrix<F> cocycles, cobounds;
    if (const MatrixZ* up = b.chain.boundary_at(d + 1); up && up->cols() > 0)
      cocycles = nullspace(Matrix<F>(to_field<F>(*up, ctx).transpose()));
    else
      cocycles = Matrix<F>::Identity(n, n);
    if (const MatrixZ* down = b.chain.boundary_at(d); down && down->rows() > 0)
      cobounds = to_field<F>(*down, ctx).transpose();
    else
      cobounds = Matrix<F>::Zero(n, 0);
    b.h[static_cast<size_t>(d - b.chain.lo)] = SubquotientBasis<F>(cocycles, cobounds);
  }
  return b;
}

namespace ring_detail {

// the destination-degree component of the product of two homogeneous cochains
template <typename F>
Vector<F> product_component(const BlockRing<F>& dst, const BlockRing<F>& b1, int deg1,
                            const Vector<F>& x, const BlockRing<F>& b2, int deg2,
                            const Vector<F>& y) {
  const Mask forced = forced_elements(dst.p, b1.p, b2.p);
  const Mask r1 = b1.p.omega & ~(b1.p.sigma | b2.p.sigma);
  const Mask r2 = (b2.p.omega & ~b1.p.omega) & ~(b1.p.sigma | b2.p.sigma);
  const int target = deg1 + deg2 + popcount(forced);
  Vector<F> w = Vector<F>::Zero(dst.chain.dim(target));
  if (w.size() == 0) return w;
  const auto& l1 = b1.labels_at(deg1);
  const auto& l2 = b2.labels_at(deg2);
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    Mask t1 = l1[static_cast<size_t>(i)];
    if (!subset_of(t1, r1)) continue;
    for (Index j = 0; j < y.size(); ++j) {
      if (y(j).is_zero()) continue;
      Mask t2 = l2[static_cast<size_t>(j)];
      if (!subset_of(t2, r2)) continue;
      Mask tau = t1 | t2 | forced;
      Index pos = dst.label_pos(target, tau);
      if (pos < 0) continue;
      F term = x(i) * y(j);
      if (shuffle_sign(t1, t2) * shuffle_sign(t1 | t2, forced) < 0) term = -term;
      w(pos) += term;
    }
  }
  return w;
}

}  // namespace ring_detail

template <typename F>
RingTable<F> total_cohomology_ring(const SimplicialComplex& k, ProductFamily family, Universe u,
                                   const typename FieldOps<F>::Ctx& ctx) {
  RingTable<F> t;
  t.family = family;
  if constexpr (std::is_same_v<F, QQ>)
    t.coeffs = Coefficients::Q();
  else
    t.coeffs = Coefficients::F(ctx.p);

  for (const IndexPair& p : universe_pairs(u, k.ground_size())) {
    BlockRing<F> b = make_block_ring<F>(k, p, ctx);
    bool nonzero = false;
    for (int d = b.chain.lo; d <= b.chain.hi() && !nonzero; ++d) nonzero = b.hdim(d) > 0;
    if (!nonzero) continue;
    Index bi = static_cast<Index>(t.blocks.size());
    for (int d = b.chain.lo; d <= b.chain.hi(); ++d)
      for (Index l = 0; l < b.hdim(d); ++l) t.basis.push_back({p, d, d, bi, l});
    t.blocks.push_back(std::move(b));
  }

  for (Index i = 0; i < static_cast<Index>(t.basis.size()); ++i) {
    const auto& ei = t.basis[static_cast<size_t>(i)];
    const BlockRing<F>& b1 = t.blocks[static_cast<size_t>(ei.block)];
    Vector<F> x = t.rep(i);
    for (Index j = 0; j < static_cast<Index>(t.basis.size()); ++j) {
      const auto& ej = t.basis[static_cast<size_t>(j)];
      const BlockRing<F>& b2 = t.blocks[static_cast<size_t>(ej.block)];
      Vector<F> y = t.rep(j);
      std::vector<std::pair<Index, F>> result;
      for (size_t bd = 0; bd < t.blocks.size(); ++bd) {
        const BlockRing<F>& dst = t.blocks[bd];
        if (!family_admissible(k, dst.p, b1.p, b2.p, family)) continue;
        int target = ei.degree + ej.degree +
                     popcount(forced_elements(dst.p, b1.p, b2.p));
        if (dst.hdim(target) == 0) continue;
        Vector<F> w = ring_detail::product_component(dst, b1, ei.degree, x, b2, ej.degree, y);
        Vector<F> coords =
            dst.h[static_cast<size_t>(target - dst.chain.lo)].coords(w);
        for (Index c = 0; c < coords.size(); ++c) {
          if (coords(c).is_zero()) continue;
          Index idx = -1;
          for (size_t bnum = 0; bnum < t.basis.size(); ++bnum) {
            const auto& e = t.basis[bnum];
            if (e.block == static_cast<Index>(bd) && e.degree == target && e.local == c) {
              idx = static_cast<Index>(bnum);
              break;
            }
          }
          POLYPROD_CHECK(idx >= 0, "total_cohomology_ring: basis index missing");
          result.emplace_back(idx, coords(c));
        }
      }
      if (!result.empty()) {
        std::sort(result.begin(), result.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        t.constants[{i, j}] = std::move(result);
      }
    }
  }
  return t;
}

template <typename F>
std::map<Index, F> ring_class(const RingTable<F>& t, const IndexPair& p, int degree,
                              const Vector<F>& cocycle) {
  std::map<Index, F> out;
  for (size_t bi = 0; bi < t.blocks.size(); ++bi) {
    if (!(t.blocks[bi].p == p)) continue;
    const BlockRing<F>& b = t.blocks[bi];
    if (b.hdim(degree) == 0) {
      return out;  // zero class
    }
    Vector<F> coords = b.h[static_cast<size_t>(degree - b.chain.lo)].coords(cocycle);
    for (Index c = 0; c < coords.size(); ++c) {
      if (coords(c).is_zero()) continue;
      for (size_t i = 0; i < t.basis.size(); ++i) {
        const auto& e = t.basis[i];
        if (e.block == static_cast<Index>(bi) && e.degree == degree && e.local == c)
          out[static_cast<Index>(i)] = coords(c);
      }
    }
    return out;
  }
  return out;  // block absent: zero
}

template <typename F>
std::map<Index, F> ring_multiply(const RingTable<F>& t, const std::map<Index, F>& a,
                                 const std::map<Index, F>& b) {
  std::map<Index, F> out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b)
      for (const auto& [k, c] : t.product(i, j)) {
        out[k] += ca * cb * c;
        if (out[k].is_zero()) out.erase(k);
      }
  return out;
}

template <typename F>
RingTable<F> polyhedral_ring(const SimplicialComplex& k, PairKind kind,
                             const typename FieldOps<F>::Ctx& ctx) {
  ProductFamily family;
  Universe universe = Universe::Rm;
  int twist_sigma = 0, twist_omega = 0;  // twist exponent = deg(b)*(tσ|σ'| + tω|ω'|)
  int shift_sigma = 0, shift_omega = 0;  // space degree = degree + sσ|σ| + sω|ω|
  if (kind.kind == PairKind::disk) {
    if (kind.n == 1) {
      family = {Family::strictly_normal, true};
    } else {
      family = {Family::special, true};
      twist_omega = kind.n - 1;
    }
    shift_omega = kind.n - 1;
  } else {
    if (kind.p == 0) {
      family = {Family::strictly_normal, false};
    } else {
      family = {Family::special, false};
      twist_sigma = kind.r;
      twist_omega = kind.p;
    }
    universe = Universe::Xm;
    shift_sigma = kind.r;
    shift_omega = kind.p;
  }
  RingTable<F> t = total_cohomology_ring<F>(k, family, universe, ctx);
  for (auto& e : t.basis)
    e.space_degree = e.degree + shift_sigma * popcount(e.p.sigma) +
                     shift_omega * popcount(e.p.omega);
  if (kind.kind == PairKind::sphere && kind.p == 0) {
    // the top sphere class squares to zero, so products of classes with
    // overlapping σ vanish even though the strictly normal mask keeps them
    for (auto it = t.constants.begin(); it != t.constants.end();) {
      const auto& a = t.basis[static_cast<size_t>(it->first.first)];
      const auto& b = t.basis[static_cast<size_t>(it->first.second)];
      it = (a.p.sigma & b.p.sigma) ? t.constants.erase(it) : std::next(it);
    }
  }
  if (twist_sigma || twist_omega) {
    for (auto& [key, vals] : t.constants) {
      const auto& a = t.basis[static_cast<size_t>(key.first)];
      const auto& b = t.basis[static_cast<size_t>(key.second)];
      int e = b.degree * (twist_sigma * popcount(a.p.sigma) + twist_omega * popcount(a.p.omega));
      if (e % 2) {
        for (auto& [idx, c] : vals) c = -c;
      }
    }
  }
  return t;
}

template <typename F>
AlgebraTable<F> to_algebra(const RingTable<F>& t, bool use_space_degree) {
  AlgebraTable<F> out;
  for (const auto& e : t.basis) {
    typename AlgebraTable<F>::Elem a;
    a.p = e.p;
    a.degree = use_space_degree ? e.space_degree : e.degree;
    a.diag = (static_cast<std::uint64_t>(e.p.sigma) << 32) | e.p.omega;
    a.label = mask_to_string(e.p.sigma) + "," + mask_to_string(e.p.omega) + ":" +
              std::to_string(e.degree) + "." + std::to_string(e.local);
    out.basis.push_back(std::move(a));
  }
  out.constants = t.constants;
  return out;
}

template <typename F>
AlgebraTable<F> tensor_algebra(const AlgebraTable<F>& a, const AlgebraTable<F>& b,
                               int ground_shift) {
  AlgebraTable<F> out;
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < static_cast<Index>(a.basis.size()); ++i)
    for (Index j = 0; j < static_cast<Index>(b.basis.size()); ++j) {
      const auto& ea = a.basis[static_cast<size_t>(i)];
      const auto& eb = b.basis[static_cast<size_t>(j)];
      typename AlgebraTable<F>::Elem e;
      e.p = IndexPair(ea.p.sigma | (eb.p.sigma << ground_shift),
                      ea.p.omega | (eb.p.omega << ground_shift));
      e.degree = ea.degree + eb.degree;
      e.diag = (static_cast<std::uint64_t>(e.p.sigma) << 32) | e.p.omega;
      e.label = ea.label + "|" + eb.label;
      out.basis.push_back(std::move(e));
      pairs.emplace_back(i, j);
    }
  auto pos = [&](Index i, Index j) {
    return i * static_cast<Index>(b.basis.size()) + j;
  };
  for (const auto& [ka, va] : a.constants)
    for (const auto& [kb, vb] : b.constants) {
      // (a'⊗b')(a''⊗b'') = (-1)^{|a''||b'|} (a'a'' ⊗ b'b'')
      Index i = pos(ka.first, kb.first), j = pos(ka.second, kb.second);
      int sign_exp = a.basis[static_cast<size_t>(ka.second)].degree *
                     b.basis[static_cast<size_t>(kb.first)].degree;
      std::vector<std::pair<Index, F>>& out_vals = out.constants[{i, j}];
      for (const auto& [ia, ca] : va)
        for (const auto& [ib, cb] : vb) {
          F c = ca * cb;
          if (sign_exp % 2) c = -c;
          out_vals.emplace_back(pos(ia, ib), c);
        }
      std::sort(out_vals.begin(), out_vals.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  return out;
}

template <typename F>
AlgebraTable<F> diagonal_tensor_algebra(const AlgebraTable<F>& a, const AlgebraTable<F>& b,
                                        bool keep_b_pair) {
  AlgebraTable<F> out;
  std::map<std::pair<Index, Index>, Index> pos;
  for (Index i = 0; i < static_cast<Index>(a.basis.size()); ++i)
    for (Index j = 0; j < static_cast<Index>(b.basis.size()); ++j) {
      if (a.basis[static_cast<size_t>(i)].diag != b.basis[static_cast<size_t>(j)].diag) continue;
      typename AlgebraTable<F>::Elem e;
      e.p = keep_b_pair ? b.basis[static_cast<size_t>(j)].p : a.basis[static_cast<size_t>(i)].p;
      e.degree =
          a.basis[static_cast<size_t>(i)].degree + b.basis[static_cast<size_t>(j)].degree;
      e.diag = a.basis[static_cast<size_t>(i)].diag;
      e.label = a.basis[static_cast<size_t>(i)].label + "&" + b.basis[static_cast<size_t>(j)].label;
      pos[{i, j}] = static_cast<Index>(out.basis.size());
      out.basis.push_back(std::move(e));
    }
  for (const auto& [ka, va] : a.constants)
    for (const auto& [kb, vb] : b.constants) {
      auto it1 = pos.find({ka.first, kb.first});
      auto it2 = pos.find({ka.second, kb.second});
      if (it1 == pos.end() || it2 == pos.end()) continue;
      int sign_exp = a.basis[static_cast<size_t>(ka.second)].degree *
                     b.basis[static_cast<size_t>(kb.first)].degree;
      std::vector<std::pair<Index, F>> vals;
      for (const auto& [ia, ca] : va)
        for (const auto& [ib, cb] : vb) {
          auto t = pos.find({ia, ib});
          if (t == pos.end()) continue;  // mismatched diagonal components vanish
          F c = ca * cb;
          if (sign_exp % 2) c = -c;
          vals.emplace_back(t->second, c);
        }
      if (vals.empty()) continue;
      std::sort(vals.begin(), vals.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      auto& slot = out.constants[{it1->second, it2->second}];
      slot.insert(slot.end(), vals.begin(), vals.end());
    }
  return out;
}

template <typename F>
AlgebraTable<F> composition_ring(const SimplicialComplex& k,
                                 const std::vector<SimplicialComplex>& ls,
                                 const typename FieldOps<F>::Ctx& ctx) {
  const int m = k.ground_size();
  if (static_cast<int>(ls.size()) != m)
    throw InputError("composition_ring: need one L_k per vertex of K");
  PairSequence pairs = composition_pairs(ls);

  AlgebraTable<F> a =
      to_algebra(total_cohomology_ring<F>(k, {Family::universal, true}, Universe::Rm, ctx));
  // tensor of the right universal tables of the factors, on the disjoint union
  AlgebraTable<F> b;
  {
    typename AlgebraTable<F>::Elem unit;
    unit.p = IndexPair(0, 0);
    b.basis.push_back(unit);
    b.constants[{0, 0}] = {{0, F(1)}};
  }
  for (int i = 0; i < m; ++i) {
    AlgebraTable<F> bi = to_algebra(
        total_cohomology_ring<F>(ls[static_cast<size_t>(i)], {Family::universal, true},
                                 Universe::Rm, ctx));
    b = tensor_algebra(b, bi, pairs.offsets[static_cast<size_t>(i)]);
  }
  // diagonal key on the A side: ω ⊆ [m]; on the B side: {k : ω_k ≠ ∅}
  for (auto& e : a.basis) e.diag = e.p.omega;
  for (auto& e : b.basis) {
    Mask diag = 0;
    for (int i = 0; i < m; ++i)
      if (pairs.block(e.p.omega, i) != 0) diag |= bit(i + 1);
    e.diag = diag;
  }
  // the result carries the [n]-level index pairs of the B side
  return diagonal_tensor_algebra(a, b, true);
}

template <typename F>
std::map<std::pair<int, int>, Index> bidegree_mult_ranks(const AlgebraTable<F>& t) {
  std::map<int, std::vector<Index>> by_degree;
  for (Index i = 0; i < static_cast<Index>(t.basis.size()); ++i)
    by_degree[t.basis[static_cast<size_t>(i)].degree].push_back(i);

  std::map<std::pair<int, int>, Index> out;
  for (const auto& [di, rows_i] : by_degree)
    for (const auto& [dj, rows_j] : by_degree) {
      Matrix<F> m = Matrix<F>::Zero(static_cast<Index>(rows_i.size() * rows_j.size()),
                                    static_cast<Index>(t.basis.size()));
      bool any = false;
      Index r = 0;
      for (Index i : rows_i)
        for (Index j : rows_j) {
          auto it = t.constants.find({i, j});
          if (it != t.constants.end())
            for (const auto& [kk, c] : it->second) {
              m(r, kk) += c;
              any = true;
            }
          ++r;
        }
      if (!any) continue;
      Index rank = rank_f(m);
      if (rank > 0) out[{di, dj}] = rank;
    }
  return out;
}

}  // namespace polyprod
