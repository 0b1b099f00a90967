#pragma once

#include <optional>

#include "polyprod/decomposition.hpp"

namespace polyprod {

// Exact face-set identity (K_{σ,ω})° = (K°)_{σ',ω} relative to ω, ω nonempty.
bool dual_local_identity(const SimplicialComplex& k, const IndexPair& p);

// Certificate for H_*^{σ,ω}(K) ≅ H^{|ω|-*-1}_{σ',ω}(K°): the chain-level map
// η ↦ ±(ω∖η) on the relative complex of non-faces, composed with the boundary
// isomorphism. The complementation sign is (-1)^{w(η) + c|η|} with
// w(η) = Σ_{v∈η} rank of v in ω and c ∈ {0,1} derived so that the map
// commutes with the differentials (asserted on the instance).
struct DualityCertificate {
  IndexPair p;
  HomologySummary left;    // H_*^{σ,ω}(K)
  HomologySummary right;   // H^*_{σ',ω}(K°), cohomological degrees
  bool matched = false;    // invariant factors agree under * -> |ω|-*-1
  int sign_exponent = 0;   // the derived c
  // over a field: per source degree d, the matrix of γ in the canonical bases
  std::map<int, Matrix<QQ>> gamma_q;              // rationals
  std::map<int, Matrix<Fp>> gamma_p;              // prime field
  bool has_matrices = false;
  bool matrices_invertible = false;
};

DualityCertificate gamma_certificate(const SimplicialComplex& k, const IndexPair& p,
                                     Coefficients coeffs);

// Z*(K;L̲)° = Z*(K°;L̲°) relative to [n], exact face sets.
bool composition_dual_identity(const SimplicialComplex& k,
                               const std::vector<SimplicialComplex>& ls);

// Thm-level tensor compatibility of γ on a composition complex block: both
// sides are built as explicit matrices in the canonical decomposition bases
// and compared up to the recorded basis changes (dimension match plus
// invertibility of every factor, exact entries for one-dimensional blocks).
bool gamma_tensor_compat(const SimplicialComplex& k, const std::vector<SimplicialComplex>& ls,
                         const IndexPair& tilde, Coefficients field);

}  // namespace polyprod
