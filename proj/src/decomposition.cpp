#include "polyprod/decomposition.hpp"

#include <algorithm>

namespace polyprod {

GradedRanks convolve(const GradedRanks& a, const GradedRanks& b) {
  GradedRanks out;
  for (const auto& [da, ra] : a.ranks)
    for (const auto& [db, rb] : b.ranks) out.add(da + db, ra * rb);
  return out;
}

namespace {

// inclusion matrix in degree d from matching labels (requires labels on both)
MatrixZ inclusion_matrix(const ChainComplex& big, const ChainComplex& small, int d) {
  Index rows = big.dim(d), cols = small.dim(d);
  MatrixZ m = MatrixZ::Zero(rows, cols);
  if (rows == 0 || cols == 0) return m;
  const auto& bl = big.labels[static_cast<size_t>(d - big.lo)];
  const auto& sl = small.labels[static_cast<size_t>(d - small.lo)];
  for (Index c = 0; c < cols; ++c) {
    auto it = std::lower_bound(bl.begin(), bl.end(), sl[static_cast<size_t>(c)]);
    POLYPROD_CHECK(it != bl.end() && *it == sl[static_cast<size_t>(c)],
                   "inclusion_matrix: C basis label missing from D");
    m(static_cast<Index>(it - bl.begin()), c) = ZZ(1);
  }
  return m;
}

template <typename F>
SplitPairSummary field_theta_parts(const ChainComplex& dx, const ChainComplex& ca,
                                   const typename FieldOps<F>::Ctx& ctx) {
  SplitPairSummary out;
  out.coeffs = dx.coeffs;
  int lo = std::min(dx.empty() ? 0 : dx.lo, ca.empty() ? 0 : ca.lo);
  int hi = std::max(dx.empty() ? -1 : dx.hi(), ca.empty() ? -1 : ca.hi());
  for (int d = lo; d <= hi; ++d) {
    // homology bases with projection maps on both sides
    auto basis_of = [&](const ChainComplex& c) {
      Matrix<F> cycles, bounds;
      Index n = c.dim(d);
      if (n == 0) return SubquotientBasis<F>();
      if (const MatrixZ* b = c.boundary_at(d); b && b->rows() > 0)
        cycles = nullspace(to_field<F>(*b, ctx));
      else
        cycles = Matrix<F>::Identity(n, n);
      if (const MatrixZ* b = c.boundary_at(d + 1); b && b->cols() > 0)
        bounds = to_field<F>(*b, ctx);
      else
        bounds = Matrix<F>::Zero(n, 0);
      return SubquotientBasis<F>(cycles, bounds);
    };
    SubquotientBasis<F> ha = basis_of(ca), hx = basis_of(dx);
    Index dim_a = ha.dim(), dim_x = hx.dim();
    if (dim_a == 0 && dim_x == 0) continue;
    Index r = 0;
    if (dim_a > 0 && dim_x > 0) {
      MatrixZ inc = inclusion_matrix(dx, ca, d);
      Matrix<F> incf = to_field<F>(inc, ctx);
      Matrix<F> theta(dim_x, dim_a);
      for (Index j = 0; j < dim_a; ++j)
        theta.col(j) = hx.coords(incf * ha.reps().col(j));
      r = rank_f(theta);
    }
    out.i_part.add(d, static_cast<long>(r));
    out.n_part.add(d, static_cast<long>(dim_a - r));
    out.e_part.add(d, static_cast<long>(dim_x - r));
  }
  return out;
}

SplitPairSummary z_theta_parts(const ChainComplex& dx, const ChainComplex& ca) {
  SplitPairSummary out;
  out.coeffs = Coefficients::Z();
  FreeHomologyBasis hx = integral_homology_basis(dx);
  FreeHomologyBasis ha = integral_homology_basis(ca);
  if (!hx.torsion_free || !ha.torsion_free) {
    out.split = false;
    out.refusal = "not homology split: torsion in the homology of the pair";
    return out;
  }
  int lo = std::min(dx.empty() ? 0 : dx.lo, ca.empty() ? 0 : ca.lo);
  int hi = std::max(dx.empty() ? -1 : dx.hi(), ca.empty() ? -1 : ca.hi());
  for (int d = lo; d <= hi; ++d) {
    Index dim_a = ha.betti(d), dim_x = hx.betti(d);
    if (dim_a == 0 && dim_x == 0) continue;
    Index r = 0;
    MatrixZ theta = MatrixZ::Zero(dim_x, dim_a);
    if (dim_a > 0 && dim_x > 0) {
      MatrixZ inc = inclusion_matrix(dx, ca, d);
      theta = hx.coord_maps[static_cast<size_t>(d - hx.lo)] *
              (inc * ha.cycles[static_cast<size_t>(d - ha.lo)]);
      SmithResult s = smith_normal_form(theta);
      r = s.rank;
      for (const ZZ& f : s.factors)
        if (f != ZZ(1)) {
          out.split = false;
          out.refusal = "not homology split: theta has invariant factor " + f.str() +
                        " in degree " + std::to_string(d);
          return out;
        }
    }
    out.theta_matrices.emplace_back(d, std::move(theta));
    out.i_part.add(d, static_cast<long>(r));
    out.n_part.add(d, static_cast<long>(dim_a - r));
    out.e_part.add(d, static_cast<long>(dim_x - r));
  }
  return out;
}

}  // namespace

SplitPairSummary theta_parts(const ChainComplex& d_complex, const ChainComplex& c_complex) {
  POLYPROD_CHECK(d_complex.coeffs == c_complex.coeffs, "theta_parts: coefficient mismatch");
  switch (d_complex.coeffs.kind) {
    case Coefficients::integers:
      return z_theta_parts(d_complex, c_complex);
    case Coefficients::rationals:
      return field_theta_parts<QQ>(d_complex, c_complex, QCtx{});
    default:
      return field_theta_parts<Fp>(d_complex, c_complex, FpCtx{d_complex.coeffs.p});
  }
}

SplitPairSummary split_summary(const SimplicialComplex& x, const SimplicialComplex& a,
                               ChainVariant variant, Coefficients coeffs) {
  SplitPairSummary out =
      theta_parts(simplicial_chain(x, variant, coeffs), simplicial_chain(a, variant, coeffs));
  out.variant = variant;
  return out;
}

namespace {

// value of H^{σ,ω}(K) ⊗ (free graded group of ranks g), shifted by `shift`
HomologySummary tensor_block_value(const HomologySummary& hk, const GradedRanks& g, int shift) {
  HomologySummary out;
  out.coeffs = hk.coeffs;
  for (const auto& [dk, grp] : hk.groups)
    for (const auto& [dg, r] : g.ranks) {
      if (r == 0) continue;
      DegreeSummary s = out.at(dk + dg + shift);
      s.free_rank += grp.free_rank * r;
      for (long c = 0; c < r; ++c)
        s.torsion.insert(s.torsion.end(), grp.torsion.begin(), grp.torsion.end());
      std::sort(s.torsion.begin(), s.torsion.end());
      out.groups[dk + dg + shift] = std::move(s);
    }
  // drop zero entries
  for (auto it = out.groups.begin(); it != out.groups.end();)
    it = it->second.is_zero() ? out.groups.erase(it) : std::next(it);
  return out;
}

void accumulate(HomologySummary& total, const HomologySummary& part) {
  for (const auto& [d, g] : part.groups) {
    DegreeSummary s = total.at(d);
    s.free_rank += g.free_rank;
    s.torsion.insert(s.torsion.end(), g.torsion.begin(), g.torsion.end());
    std::sort(s.torsion.begin(), s.torsion.end());
    total.groups[d] = std::move(s);
  }
}

}  // namespace

DecompositionResult decompose(const SimplicialComplex& k, const PairSequence& pairs,
                              Flavor flavor, Coefficients coeffs) {
  if (k.ground_size() != pairs.size())
    throw InputError("decompose: K must live on [m] with m = number of pairs");
  const int m = k.ground_size();
  const ChainVariant variant =
      flavor == Flavor::product ? ChainVariant::plain : ChainVariant::suspended_reduced;
  const int shift = flavor == Flavor::product ? 0 : -1;

  std::vector<SplitPairSummary> parts;
  parts.reserve(pairs.entries.size());
  for (const auto& pr : pairs.entries) {
    parts.push_back(split_summary(pr.x, pr.a, variant, coeffs));
    if (!parts.back().split)
      throw MathRefusal("decompose: pair " + std::to_string(parts.size()) + ": " +
                        parts.back().refusal);
  }

  Mask e_sup = 0, n_sup = 0, i_sup = 0;
  for (int i = 0; i < m; ++i) {
    if (parts[static_cast<size_t>(i)].support_e()) e_sup |= bit(i + 1);
    if (parts[static_cast<size_t>(i)].support_n()) n_sup |= bit(i + 1);
    if (parts[static_cast<size_t>(i)].support_i()) i_sup |= bit(i + 1);
  }

  DecompositionResult res;
  res.flavor = flavor;
  res.coeffs = coeffs;
  res.total.coeffs = coeffs;
  for_each_subset(e_sup, [&](Mask sigma) {
    for_each_subset(n_sup & ~sigma, [&](Mask omega) {
      if (!subset_of(full_mask(m) & ~(sigma | omega), i_sup)) return;
      IndexPair p(sigma, omega);
      HomologySummary hk = block_homology(k, p, coeffs);
      if (hk.is_zero()) return;
      GradedRanks g;
      g.add(0, 1);
      for (int i = 0; i < m; ++i) {
        const SplitPairSummary& sp = parts[static_cast<size_t>(i)];
        const GradedRanks& h = (sigma & bit(i + 1))   ? sp.e_part
                               : (omega & bit(i + 1)) ? sp.n_part
                                                      : sp.i_part;
        g = convolve(g, h);
        if (g.is_zero()) break;
      }
      if (g.is_zero()) return;
      HomologySummary value = tensor_block_value(hk, g, shift);
      if (value.is_zero()) return;
      accumulate(res.total, value);
      res.blocks.push_back({p, std::move(value)});
    });
  });
  std::sort(res.blocks.begin(), res.blocks.end(),
            [](const BlockSummand& a, const BlockSummand& b) { return a.p < b.p; });
  return res;
}

DecompositionResult disk_pair_closed_form(const SimplicialComplex& k, int n,
                                          Coefficients coeffs) {
  if (n < 1) throw InputError("disk pair needs n >= 1");
  DecompositionResult res;
  res.flavor = Flavor::product;
  res.coeffs = coeffs;
  res.total.coeffs = coeffs;
  for_each_subset(full_mask(k.ground_size()), [&](Mask omega) {
    HomologySummary h = reduced_homology(restriction(k, omega), coeffs);
    if (h.is_zero()) return;
    HomologySummary value = h.shifted((n - 1) * popcount(omega) + 1);
    accumulate(res.total, value);
    res.blocks.push_back({IndexPair(0, omega), std::move(value)});
  });
  std::sort(res.blocks.begin(), res.blocks.end(),
            [](const BlockSummand& a, const BlockSummand& b) { return a.p < b.p; });
  return res;
}

DecompositionResult sphere_pair_closed_form(const SimplicialComplex& k, int r, int p,
                                            Flavor flavor, Coefficients coeffs) {
  if (!(0 <= p && p < r)) throw InputError("sphere pair needs 0 <= p < r");
  const int m = k.ground_size();
  DecompositionResult res;
  res.flavor = flavor;
  res.coeffs = coeffs;
  res.total.coeffs = coeffs;
  if (flavor == Flavor::product) {
    for (const IndexPair& ip : all_index_pairs(m)) {
      HomologySummary h = reduced_homology(local_complex(k, ip), coeffs);
      if (h.is_zero()) continue;
      HomologySummary value = h.shifted(r * popcount(ip.sigma) + p * popcount(ip.omega) + 1);
      accumulate(res.total, value);
      res.blocks.push_back({ip, std::move(value)});
    }
  } else {
    if (k.is_void()) return res;
    for (Mask sigma : k.faces()) {
      HomologySummary h = reduced_homology(link(k, sigma), coeffs);
      if (h.is_zero()) continue;
      int s = popcount(sigma);
      HomologySummary value = h.shifted(r * s + p * (m - s) + m);
      accumulate(res.total, value);
      res.blocks.push_back({IndexPair(sigma, full_mask(m) & ~sigma), std::move(value)});
    }
  }
  std::sort(res.blocks.begin(), res.blocks.end(),
            [](const BlockSummand& a, const BlockSummand& b) { return a.p < b.p; });
  return res;
}

IndexedHomology join_total_homology(const SimplicialComplex& k, const PairSequence& pairs,
                                    const std::vector<IndexPair>& universe,
                                    Coefficients coeffs) {
  if (k.ground_size() != pairs.size())
    throw InputError("join_total_homology: K must live on [m] with m = number of pairs");
  const int m = k.ground_size();

  // dense split parts of every factor pair on its full X_{n_k}
  std::vector<std::map<IndexPair, SplitPairSummary>> dense(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& pr = pairs.entries[static_cast<size_t>(i)];
    for (const IndexPair& q : all_index_pairs(pr.x.ground_size())) {
      SplitPairSummary sp = theta_parts(suspended_local_chain(pr.x, q, coeffs),
                                        suspended_local_chain(pr.a, q, coeffs));
      if (!sp.split)
        throw MathRefusal("join_total_homology: pair " + std::to_string(i + 1) +
                          " is not densely split at sigma=" + mask_to_string(q.sigma) +
                          " omega=" + mask_to_string(q.omega) + ": " + sp.refusal);
      dense[static_cast<size_t>(i)][q] = std::move(sp);
    }
  }

  IndexedHomology out;
  out.coeffs = coeffs;
  for (const IndexPair& tilde : universe) {
    HomologySummary blockval;
    blockval.coeffs = coeffs;
    // candidate (σ,ω) on [m] run over the support product of the dense parts
    Mask e_sup = 0, n_sup = 0, i_sup = 0;
    std::vector<const SplitPairSummary*> sp(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      IndexPair q(pairs.block(tilde.sigma, i), pairs.block(tilde.omega, i));
      sp[static_cast<size_t>(i)] = &dense[static_cast<size_t>(i)].at(q);
      if (sp[static_cast<size_t>(i)]->support_e()) e_sup |= bit(i + 1);
      if (sp[static_cast<size_t>(i)]->support_n()) n_sup |= bit(i + 1);
      if (sp[static_cast<size_t>(i)]->support_i()) i_sup |= bit(i + 1);
    }
    for_each_subset(e_sup, [&](Mask sigma) {
      for_each_subset(n_sup & ~sigma, [&](Mask omega) {
        if (!subset_of(full_mask(m) & ~(sigma | omega), i_sup)) return;
        IndexPair p(sigma, omega);
        HomologySummary hk = block_homology(k, p, coeffs);
        if (hk.is_zero()) return;
        GradedRanks g;
        g.add(0, 1);
        for (int i = 0; i < m; ++i) {
          const SplitPairSummary& s = *sp[static_cast<size_t>(i)];
          const GradedRanks& h = (sigma & bit(i + 1))   ? s.e_part
                                 : (omega & bit(i + 1)) ? s.n_part
                                                        : s.i_part;
          g = convolve(g, h);
          if (g.is_zero()) break;
        }
        if (g.is_zero()) return;
        accumulate(blockval, tensor_block_value(hk, g, 0));
      });
    });
    out.set(tilde, std::move(blockval));
  }
  return out;
}

}  // namespace polyprod
