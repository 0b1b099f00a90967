#pragma once

#include "polyprod/total_complex.hpp"

namespace polyprod {

enum class Flavor { product, join };

// Free ranks per degree (split parts are free whenever they exist).
struct GradedRanks {
  std::map<int, long> ranks;

  long at(int d) const {
    auto it = ranks.find(d);
    return it == ranks.end() ? 0 : it->second;
  }
  void add(int d, long r) {
    if (r != 0) ranks[d] += r;
  }
  bool is_zero() const { return ranks.empty(); }
  long total() const {
    long t = 0;
    for (const auto& [d, r] : ranks) t += r;
    return t;
  }
};

GradedRanks convolve(const GradedRanks& a, const GradedRanks& b);

// The three-part split data of a chain-complex pair (D, C): θ: H(C) -> H(D)
// induced by inclusion, with e = coker θ, n = ker θ, i = coim θ. Over Z the
// pair is split iff H(C) and H(D) are torsion-free and every θ matrix has
// unit invariant factors (the kernel of a map of free groups is free, so
// only the cokernel can obstruct).
struct SplitPairSummary {
  Coefficients coeffs;
  ChainVariant variant = ChainVariant::plain;
  bool split = true;
  std::string refusal;
  GradedRanks e_part, n_part, i_part;
  std::vector<std::pair<int, MatrixZ>> theta_matrices;  // integral case, per degree

  bool support_e() const { return !e_part.is_zero(); }
  bool support_n() const { return !n_part.is_zero(); }
  bool support_i() const { return !i_part.is_zero(); }
};

// θ-parts for an inclusion C -> D given by matching basis labels.
SplitPairSummary theta_parts(const ChainComplex& d_complex, const ChainComplex& c_complex);

SplitPairSummary split_summary(const SimplicialComplex& x, const SimplicialComplex& a,
                               ChainVariant variant, Coefficients coeffs);

// One (σ,ω) summand H^{σ,ω}(K) ⊗ (H_1 ⊗ ... ⊗ H_m) of Theorem-level data.
struct BlockSummand {
  IndexPair p;
  HomologySummary value;
};

struct DecompositionResult {
  Flavor flavor = Flavor::product;
  Coefficients coeffs;
  std::vector<BlockSummand> blocks;  // sorted by index pair, zero blocks dropped
  HomologySummary total;             // aggregated; degrees are space degrees for
                                     // the product flavor and reduced degrees of
                                     // the join for the join flavor
};

// ⊕_{(σ,ω)∈D} H^{σ,ω}(K) ⊗ H^{σ,ω}(X̲,A̲), D = product of supports. Product
// flavor uses plain chains, join flavor suspended reduced chains. Unsplit
// pairs over Z are refused.
DecompositionResult decompose(const SimplicialComplex& k, const PairSequence& pairs,
                              Flavor flavor, Coefficients coeffs);

// H_d = ⊕_{ω ⊆ [m]} H̃_{d-(n-1)|ω|-1}(K|_ω), the full ω-sum (the unit block
// ω = ∅ contributes the degree-0 class).
DecompositionResult disk_pair_closed_form(const SimplicialComplex& k, int n,
                                          Coefficients coeffs);

// Product flavor: H_d = ⊕_{(σ,ω)} H̃_{d-r|σ|-p|ω|-1}(K_{σ,ω}).
// Join flavor:    H̃_d = ⊕_{σ∈K} H̃_{d-r|σ|-p(m-|σ|)-m}(link_K σ).
DecompositionResult sphere_pair_closed_form(const SimplicialComplex& k, int r, int p,
                                            Flavor flavor, Coefficients coeffs);

// Theorem-level total homology of a polyhedral join: each (σ̃,ω̃) block equals
// ⊕_{(σ,ω)∈D} H^{σ,ω}(K) ⊗ (⊗_k H_k^{σ_k,ω_k}) with parts from the dense
// θ_{σ_k,ω_k}. Refused when a pair is not densely split.
IndexedHomology join_total_homology(const SimplicialComplex& k, const PairSequence& pairs,
                                    const std::vector<IndexPair>& universe,
                                    Coefficients coeffs);

}  // namespace polyprod
