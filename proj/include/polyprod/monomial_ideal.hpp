#pragma once

#include "polyprod/decomposition.hpp"

namespace polyprod {

using Expvec = std::vector<int>;  // exponent vector, one entry per variable

// Monomial ideal given by its minimal generator set.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Expvec> gens;  // minimalized (no generator divides another), sorted

  static MonomialIdeal from_generators(int nvars, std::vector<Expvec> gens);
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars == b.nvars && a.gens == b.gens;
  }
};

// (homological degree, multidegree) -> dimension over the field.
struct BettiTable {
  std::map<std::pair<int, Expvec>, long> entries;

  void add(int i, const Expvec& deg, long v) {
    if (v != 0) entries[{i, deg}] += v;
  }
  GradedRanks totals() const {
    GradedRanks g;
    for (const auto& [key, v] : entries) g.add(key.first, v);
    return g;
  }
  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries == b.entries;
  }
};

// I_{(K;r)}: generators x^{r|N} over the minimal non-faces N of K.
// K = { } and K = Δ^[m] are refused.
MonomialIdeal stanley_reisner(const SimplicialComplex& k, const Expvec& r);

enum class TorModule { ideal, quotient };

// Tor over the polynomial ring via the Taylor complex of the generators,
// tensored with the residue field; multigraded. For module = ideal the usual
// shift Tor_i(I,k) = Tor_{i+1}(R/I,k) is applied. Field coefficients only;
// generator count capped at 20.
BettiTable taylor_tor(const MonomialIdeal& ideal, TorModule module, Coefficients field);

struct HochsterResult {
  BettiTable taylor;    // Tor_*(I_{(K;r)}, k), multigraded
  BettiTable hochster;  // ⊕_{ω∉K} H̃^{|ω|-*-2}(K|_ω) at multidegree r·ω
  bool match = false;
};

HochsterResult hochster_check(const SimplicialComplex& k, const Expvec& r, Coefficients field);

struct CompositionIdealResult {
  MonomialIdeal ideal;          // Z^⊗(K; I_{(L_1;r_1)}, ..., I_{(L_m;r_m)})
  MonomialIdeal via_dual;       // I_{(Z*(K°;L̲); (r_1,...,r_m))}
  bool identity = false;        // generator-set equality of the two
};

CompositionIdealResult composition_ideal(const SimplicialComplex& k,
                                         const std::vector<SimplicialComplex>& ls,
                                         const std::vector<Expvec>& rs);

// Right side of the composition Tor identity, per homological degree:
// ⊕_{σ∈K} H^{σ,[m]∖σ}(K) ⊗ (⊗_{k∉σ} Tor(I_{(L_k;r_k)}, k)).
GradedRanks composition_tor_double_sum(const SimplicialComplex& k,
                                       const std::vector<SimplicialComplex>& ls,
                                       const std::vector<Expvec>& rs, Coefficients field);

}  // namespace polyprod
