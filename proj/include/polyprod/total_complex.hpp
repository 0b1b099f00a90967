#pragma once

#include <functional>
#include <map>

#include "polyprod/chain_complex.hpp"

namespace polyprod {

// Index universes over X_m.
enum class Universe { Xm, Rm, Lm };

std::vector<IndexPair> universe_pairs(Universe u, int m);
bool universe_contains(Universe u, const IndexPair& p);

// One generator t_{E, N̄, N, I} of the total chain complex: E ⊔ N̄ ⊔ N ⊔ I = [m],
// degree |N̄|. Membership in the (σ,ω) block means E = σ, N̄ ∪ N = ω, σ ∪ N̄ ∈ K.
struct TotalGenerator {
  Mask e = 0, nbar = 0, n = 0, i = 0;
  int degree() const { return popcount(nbar); }
};

// The (σ,ω) block of the total chain complex of K, built directly from the
// atom tensor structure: d moves one N̄ element to N at a time with the sign
// (-1)^{#{j in N̄ : j < k}}. Basis labels are the N̄ masks.
ChainComplex total_block(const SimplicialComplex& k, const IndexPair& p,
                         Coefficients coeffs = Coefficients::Z());

// Suspended reduced chains of the local complex K_{σ,ω}; under ε the labels
// match total_block exactly.
ChainComplex suspended_local_chain(const SimplicialComplex& k, const IndexPair& p,
                                   Coefficients coeffs = Coefficients::Z());

// The label bijection ε(N̄) = t_{σ, N̄, ω∖N̄, [m]∖(σ∪ω)}. Asserts that ε is a
// degree-preserving chain isomorphism (the two differentials agree entrywise)
// and returns the generators in basis order per degree.
std::vector<std::vector<TotalGenerator>> local_iso_to_suspension(const SimplicialComplex& k,
                                                                 const IndexPair& p);

// (σ,ω) -> per-degree invariant factors / Betti numbers; absent blocks are zero.
struct IndexedHomology {
  Coefficients coeffs;
  std::map<IndexPair, HomologySummary> blocks;

  HomologySummary at(const IndexPair& p) const {
    auto it = blocks.find(p);
    return it == blocks.end() ? HomologySummary{} : it->second;
  }
  void set(const IndexPair& p, HomologySummary h) {
    if (!h.is_zero()) blocks[p] = std::move(h);
  }
  friend bool operator==(const IndexedHomology& a, const IndexedHomology& b) {
    return a.blocks == b.blocks;
  }
};

// H^{σ,ω}(K) per block, computed through the suspension isomorphism; for
// m <= 3 every block is cross-checked against the direct block complex.
IndexedHomology total_homology(const SimplicialComplex& k, Universe u, Coefficients coeffs);
IndexedHomology total_homology(const SimplicialComplex& k, const std::vector<IndexPair>& blocks,
                               Coefficients coeffs);

// Cohomology of a single block.
HomologySummary block_homology(const SimplicialComplex& k, const IndexPair& p, Coefficients c);
HomologySummary block_cohomology(const SimplicialComplex& k, const IndexPair& p, Coefficients c);

// Simple thread helper honoring the POLYPROD_THREADS environment variable;
// results must be written to disjoint slots by index.
void parallel_for(Index n, const std::function<void(Index)>& fn);

}  // namespace polyprod
