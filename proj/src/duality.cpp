#include "polyprod/duality.hpp"

#include <algorithm>

#include "polyprod/complex_io.hpp"

namespace polyprod {

bool dual_local_identity(const SimplicialComplex& k, const IndexPair& p) {
  if (p.omega == 0) throw InputError("dual_local_identity: omega must be nonempty");
  SimplicialComplex lhs = alexander_dual(local_complex(k, p), p.omega);
  SimplicialComplex rhs =
      local_complex(alexander_dual(k, full_mask(k.ground_size())),
                    IndexPair(p.sigma_prime(k.ground_size()), p.omega));
  return lhs == rhs;
}

namespace {

// Relative chain complex C_*(Δ^ω, K_{σ,ω}) on the non-faces η ⊆ ω of the
// local complex, at geometric degree |η| - 1. Labels are the η masks.
ChainComplex relative_nonface_complex(const SimplicialComplex& k, const IndexPair& p) {
  SimplicialComplex local = local_complex(k, p);
  ChainComplex c;
  c.coeffs = Coefficients::Z();
  std::vector<std::vector<Mask>> labels(static_cast<size_t>(popcount(p.omega)) + 1);
  int lo_size = popcount(p.omega) + 1, hi_size = -1;
  for_each_subset(p.omega, [&](Mask eta) {
    if (local.contains(eta)) return;
    int s = popcount(eta);
    labels[static_cast<size_t>(s)].push_back(eta);
    lo_size = std::min(lo_size, s);
    hi_size = std::max(hi_size, s);
  });
  if (hi_size < 0) return c;  // no non-faces: relative complex is zero
  for (auto& l : labels) std::sort(l.begin(), l.end());

  c.lo = lo_size - 1;
  std::vector<std::map<Mask, Index>> index(static_cast<size_t>(hi_size - lo_size + 1));
  for (int s = lo_size; s <= hi_size; ++s) {
    const auto& l = labels[static_cast<size_t>(s)];
    c.labels.push_back(l);
    c.dims.push_back(static_cast<Index>(l.size()));
    for (size_t i = 0; i < l.size(); ++i)
      index[static_cast<size_t>(s - lo_size)][l[i]] = static_cast<Index>(i);
  }
  c.boundary.resize(c.dims.size());
  for (size_t i = 0; i < c.dims.size(); ++i) {
    Index rows = (i == 0) ? 0 : c.dims[i - 1];
    MatrixZ b = MatrixZ::Zero(rows, c.dims[i]);
    if (i > 0) {
      for (Index col = 0; col < b.cols(); ++col) {
        Mask eta = c.labels[i][static_cast<size_t>(col)];
        int j = 0;
        for (int v : vertices_of(eta)) {
          Mask rest = eta & ~bit(v);
          auto it = index[i - 1].find(rest);
          if (it != index[i - 1].end()) b(it->second, col) += ZZ(parity_sign(j));
          ++j;
        }
      }
    }
    c.boundary[i] = std::move(b);
  }
  c.validate();
  return c;
}

// Complementation matrices Ψ_d: rel degree d -> dual-block cochain degree
// |ω|-d-1, entries (-1)^{w(η)+c|η|} at (ω∖η, η).
std::vector<MatrixZ> psi_matrices(const ChainComplex& rel, const ChainComplex& dual_block,
                                  Mask omega, int c) {
  std::vector<MatrixZ> out(static_cast<size_t>(rel.degrees()));
  const int w = popcount(omega);
  for (int i = 0; i < rel.degrees(); ++i) {
    int d = rel.lo + i;
    int target = w - d - 1;  // suspension degree of the dual-block label
    Index rows = dual_block.dim(target);
    MatrixZ m = MatrixZ::Zero(rows, rel.dims[static_cast<size_t>(i)]);
    const auto& dual_labels =
        (target >= dual_block.lo && target <= dual_block.hi())
            ? dual_block.labels[static_cast<size_t>(target - dual_block.lo)]
            : std::vector<Mask>{};
    for (Index col = 0; col < m.cols(); ++col) {
      Mask eta = rel.labels[static_cast<size_t>(i)][static_cast<size_t>(col)];
      Mask g = omega & ~eta;
      auto it = std::lower_bound(dual_labels.begin(), dual_labels.end(), g);
      POLYPROD_CHECK(it != dual_labels.end() && *it == g,
                     "duality: complement of a non-face missing from the dual block");
      int weight = 0;
      for (int v : vertices_of(eta)) weight += rank_in(omega, v);
      m(static_cast<Index>(it - dual_labels.begin()), col) =
          ZZ(parity_sign(weight + c * popcount(eta)));
    }
    out[static_cast<size_t>(i)] = m;
  }
  return out;
}

// check Ψ ∘ ∂_rel == δ ∘ Ψ with δ the transposed boundary of the dual block
bool psi_is_chain_map(const ChainComplex& rel, const ChainComplex& dual_block, Mask omega,
                      const std::vector<MatrixZ>& psi) {
  const int w = popcount(omega);
  for (int i = 1; i < rel.degrees(); ++i) {
    int d = rel.lo + i;
    int target = w - d - 1;  // Ψ_d lands here; δ raises to target+1 = w-(d-1)-1
    MatrixZ lhs = psi[static_cast<size_t>(i - 1)] * rel.boundary[static_cast<size_t>(i)];
    MatrixZ rhs;
    if (const MatrixZ* b = dual_block.boundary_at(target + 1); b && b->rows() > 0)
      rhs = b->transpose() * psi[static_cast<size_t>(i)];
    else
      rhs = MatrixZ::Zero(lhs.rows(), lhs.cols());
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
    if (lhs != rhs) return false;
  }
  return true;
}

template <typename F>
void gamma_matrices(const SimplicialComplex& k, const IndexPair& p,
                    const ChainComplex& block, const ChainComplex& rel,
                    const ChainComplex& dual_block, const std::vector<MatrixZ>& psi,
                    const typename FieldOps<F>::Ctx& ctx, std::map<int, Matrix<F>>& out,
                    bool& invertible) {
  invertible = true;
  const int w = popcount(p.omega);
  const int v0 = p.omega ? vertices_of(p.omega).front() : 0;

  auto homology_basis = [&](const ChainComplex& c, int d, bool cochain) {
    Index n = c.dim(d);
    if (n == 0) return SubquotientBasis<F>();
    Matrix<F> cycles, bounds;
    const MatrixZ* out_b = cochain ? c.boundary_at(d + 1) : c.boundary_at(d);
    const MatrixZ* in_b = cochain ? c.boundary_at(d) : c.boundary_at(d + 1);
    if (cochain) {
      cycles = (out_b && out_b->rows() > 0) ? nullspace(Matrix<F>(to_field<F>(*out_b, ctx).transpose()))
                                            : Matrix<F>::Identity(n, n);
      bounds = (in_b && in_b->rows() > 0) ? Matrix<F>(to_field<F>(*in_b, ctx).transpose())
                                          : Matrix<F>::Zero(n, 0);
    } else {
      cycles = (out_b && out_b->rows() > 0) ? nullspace(to_field<F>(*out_b, ctx))
                                            : Matrix<F>::Identity(n, n);
      bounds = (in_b && in_b->cols() > 0) ? to_field<F>(*in_b, ctx) : Matrix<F>::Zero(n, 0);
    }
    return SubquotientBasis<F>(cycles, bounds);
  };

  for (int d = block.lo; d <= block.hi(); ++d) {
    SubquotientBasis<F> src = homology_basis(block, d, false);
    if (src.dim() == 0) continue;
    int target = w - d - 1;
    SubquotientBasis<F> dst = homology_basis(dual_block, target, true);
    Matrix<F> g(dst.dim(), src.dim());
    for (Index j = 0; j < src.dim(); ++j) {
      // cone lift: κ(z) over the relative degree-d basis (η of size d+1)
      Vector<F> rel_vec = Vector<F>::Zero(rel.dim(d));
      const auto& block_labels = block.labels[static_cast<size_t>(d - block.lo)];
      const auto& rel_labels = (d >= rel.lo && d <= rel.hi())
                                   ? rel.labels[static_cast<size_t>(d - rel.lo)]
                                   : std::vector<Mask>{};
      for (Index t = 0; t < block.dim(d); ++t) {
        F coeff = src.reps()(t, j);
        if (coeff.is_zero()) continue;
        Mask tau = block_labels[static_cast<size_t>(t)];
        if (tau & bit(v0)) continue;  // cone kills faces through the apex
        Mask eta = tau | bit(v0);
        auto it = std::lower_bound(rel_labels.begin(), rel_labels.end(), eta);
        if (it == rel_labels.end() || *it != eta) continue;  // eta is a face: dies in rel
        rel_vec(static_cast<Index>(it - rel_labels.begin())) += coeff;
      }
      Vector<F> cochain = Vector<F>::Zero(dual_block.dim(target));
      if (rel.dim(d) > 0)
        cochain = to_field<F>(psi[static_cast<size_t>(d - rel.lo)], ctx) * rel_vec;
      g.col(j) = dst.coords(cochain);
    }
    if (g.rows() != g.cols() || rank_f(g) != g.rows()) invertible = false;
    out[d] = std::move(g);
  }
}

}  // namespace

DualityCertificate gamma_certificate(const SimplicialComplex& k, const IndexPair& p,
                                     Coefficients coeffs) {
  if (p.omega == 0) throw InputError("gamma_certificate: omega must be nonempty");
  const int m = k.ground_size();
  DualityCertificate cert;
  cert.p = p;
  SimplicialComplex dual = alexander_dual(k, full_mask(m));
  IndexPair dp(p.sigma_prime(m), p.omega);

  cert.left = block_homology(k, p, coeffs);
  cert.right = block_cohomology(dual, dp, coeffs);

  const int w = popcount(p.omega);
  cert.matched = true;
  for (int d = -w; d <= 2 * w; ++d)
    if (!(cert.left.at(d) == cert.right.at(w - d - 1))) cert.matched = false;

  // derive the complementation sign and assert the chain-map property
  ChainComplex rel = relative_nonface_complex(k, p);
  ChainComplex dual_block = suspended_local_chain(dual, dp);
  if (!rel.empty()) {
    bool found = false;
    for (int c = 0; c <= 1 && !found; ++c) {
      std::vector<MatrixZ> psi = psi_matrices(rel, dual_block, p.omega, c);
      if (psi_is_chain_map(rel, dual_block, p.omega, psi)) {
        cert.sign_exponent = c;
        found = true;
      }
    }
    if (!found)
      throw InvariantViolation("gamma_certificate: no complementation sign makes ψ a chain map for sigma=" +
                               mask_to_string(p.sigma) + " omega=" + mask_to_string(p.omega) +
                               " on\n" + complex_to_text(k));
  }

  if (coeffs.is_field() && !rel.empty()) {
    ChainComplex block = suspended_local_chain(k, p, coeffs);
    std::vector<MatrixZ> psi = psi_matrices(rel, dual_block, p.omega, cert.sign_exponent);
    if (coeffs.kind == Coefficients::rationals)
      gamma_matrices<QQ>(k, p, block, rel, dual_block, psi, QCtx{}, cert.gamma_q,
                         cert.matrices_invertible);
    else
      gamma_matrices<Fp>(k, p, block, rel, dual_block, psi, FpCtx{coeffs.p}, cert.gamma_p,
                         cert.matrices_invertible);
    cert.has_matrices = true;
  }
  return cert;
}

bool composition_dual_identity(const SimplicialComplex& k,
                               const std::vector<SimplicialComplex>& ls) {
  SimplicialComplex z = composition_complex(k, ls);
  SimplicialComplex lhs = alexander_dual(z, full_mask(z.ground_size()));
  std::vector<SimplicialComplex> duals;
  for (const SimplicialComplex& l : ls)
    duals.push_back(alexander_dual(l, full_mask(l.ground_size())));
  SimplicialComplex rhs =
      composition_complex(alexander_dual(k, full_mask(k.ground_size())), duals);
  return lhs == rhs;
}

bool gamma_tensor_compat(const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls,
                         const IndexPair& tilde, Coefficients field) {
  if (!field.is_field()) throw InputError("gamma_tensor_compat: field coefficients required");
  if (tilde.omega == 0) throw InputError("gamma_tensor_compat: omega must be nonempty");
  const int m = k.ground_size();
  PairSequence pairs = composition_pairs(ls);
  SimplicialComplex z = composition_complex(k, ls);

  // factor indices and the K-level pair
  Mask sigma = 0, omega = 0;
  std::vector<IndexPair> locals;
  for (int i = 0; i < m; ++i) {
    IndexPair q(pairs.block(tilde.sigma, i), pairs.block(tilde.omega, i));
    locals.push_back(q);
    if (q.omega != 0) omega |= bit(i + 1);
    if (!ls[static_cast<size_t>(i)].contains(q.sigma)) sigma |= bit(i + 1);
  }
  if (sigma & omega) return true;  // a factor block is zero on both sides
  IndexPair kp(sigma, omega);

  DualityCertificate lhs = gamma_certificate(z, tilde, field);
  DualityCertificate gk = gamma_certificate(k, kp, field);

  // per-degree dimensions of the tensor side
  GradedRanks rhs_dims;
  {
    GradedRanks g;
    for (const auto& [d, grp] : block_homology(k, kp, field).groups) g.add(d, grp.free_rank);
    bool factors_ok = true;
    for (int i = 0; i < m && factors_ok; ++i) {
      const IndexPair& q = locals[static_cast<size_t>(i)];
      if (q.omega == 0) continue;  // unit factor
      DualityCertificate gl = gamma_certificate(ls[static_cast<size_t>(i)], q, field);
      if (!gl.matched || !gl.matrices_invertible) factors_ok = false;
      GradedRanks f;
      for (const auto& [d, grp] : block_homology(ls[static_cast<size_t>(i)], q, field).groups)
        f.add(d, grp.free_rank);
      g = convolve(g, f);
    }
    if (!factors_ok && !g.is_zero()) return false;
    rhs_dims = g;
  }
  if (!gk.matched || (block_homology(k, kp, field).total_rank() > 0 && !gk.matrices_invertible))
    if (!rhs_dims.is_zero()) return false;

  // compare against the actual block of the composition complex
  GradedRanks lhs_dims;
  for (const auto& [d, grp] : lhs.left.groups) lhs_dims.add(d, grp.free_rank);
  if (!(lhs_dims.ranks == rhs_dims.ranks)) return false;
  if (lhs_dims.is_zero()) return true;  // vacuously compatible
  return lhs.matched && lhs.matrices_invertible;
}

}  // namespace polyprod
