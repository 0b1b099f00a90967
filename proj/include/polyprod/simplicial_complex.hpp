#pragma once

#include <optional>
#include <vector>

#include "polyprod/subset.hpp"

namespace polyprod {

// Finite simplicial complex on the ground set [m], faces as bitmasks.
// Ghost vertices are allowed: {i} need not be a face even though i <= m.
// The void complex { } is a distinguished flag; every non-void complex
// contains the empty face. Immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() : ground_(0), void_(false), faces_{0} {}

  static SimplicialComplex void_complex(int m);
  static SimplicialComplex empty_complex(int m);  // {∅}
  static SimplicialComplex from_facets(int m, const std::vector<Mask>& facets);
  static SimplicialComplex from_faces(int m, std::vector<Mask> faces, bool is_void = false);
  static SimplicialComplex simplex(int m, Mask s);            // Δ^S on [m]
  static SimplicialComplex boundary_of_simplex(int m, Mask s);  // ∂Δ^S on [m]
  static SimplicialComplex full_simplex(int m) { return simplex(m, full_mask(m)); }
  static SimplicialComplex polygon(int m);  // the m-gon, m >= 3

  int ground_size() const { return ground_; }
  bool is_void() const { return void_; }
  const std::vector<Mask>& faces() const { return faces_; }
  bool contains(Mask f) const;
  Mask vertex_support() const;
  int dim() const;  // -1 for {∅}; meaningless (-2) for void
  std::vector<Mask> facets() const;
  std::vector<Mask> faces_of_size(int k) const;
  std::vector<Mask> minimal_nonfaces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.ground_ == b.ground_ && a.void_ == b.void_ && a.faces_ == b.faces_;
  }
  friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
    return !(a == b);
  }

 private:
  int ground_;
  bool void_;
  std::vector<Mask> faces_;  // sorted ascending by mask value
};

// A sequence of simplicial pairs (X_k, A_k) with A_k a subcomplex of X_k,
// glued on the disjoint union [n] = [n_1] ⊔ ... ⊔ [n_m] by contiguous offset
// blocks.
struct PairSequence {
  struct Pair {
    SimplicialComplex x, a;
  };
  std::vector<Pair> entries;
  std::vector<int> offsets;  // offsets[k] = n_1 + ... + n_k, offsets[0] = 0

  PairSequence() = default;
  explicit PairSequence(std::vector<Pair> pairs);
  static PairSequence uniform(int m, SimplicialComplex x, SimplicialComplex a);

  int total_ground() const { return offsets.empty() ? 0 : offsets.back(); }
  int size() const { return static_cast<int>(entries.size()); }
  // split a subset of [n] into the k-th block, shifted down to [n_k]
  Mask block(Mask s, int k) const;
  // embed a subset of [n_k] into [n]
  Mask embed(Mask s, int k) const;
};

// -- complex algebra ---------------------------------------------------------

// K_{σ,ω} = (link_K σ)|_ω = {τ ⊆ ω : τ ∪ σ ∈ K}; the void complex if σ ∉ K.
// Lives on the ambient ground set with faces inside ω.
SimplicialComplex local_complex(const SimplicialComplex& k, const IndexPair& p);

// link_K S on the ambient ground set; { } if S ∉ K.
SimplicialComplex link(const SimplicialComplex& k, Mask s);

// full subcomplex K|_S.
SimplicialComplex restriction(const SimplicialComplex& k, Mask s);

// Alexander dual relative to S: K° = { S∖σ : σ ⊆ S, σ ∉ K }.
SimplicialComplex alexander_dual(const SimplicialComplex& k, Mask s);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// Join on the disjoint union of ground sets; { } * Z = { }.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

// Staircase (monotone-chain) triangulation of |X| x |Y|; vertex (i,j) is
// numbered (i-1)*|T|+j. Void inputs are an input error; {∅} x Z = {∅}.
SimplicialComplex staircase_product(const SimplicialComplex& x, const SimplicialComplex& y);

// Z*(K; X̲, A̲) = ∪_{τ∈K} Y_1^τ * ... * Y_m^τ; Z*({ };...) = { }.
SimplicialComplex polyhedral_join(const SimplicialComplex& k, const PairSequence& pairs);

// Z(K; X̲, A̲) with staircase products; Z({ };...) = {∅}.
SimplicialComplex polyhedral_product_complex(const SimplicialComplex& k,
                                             const PairSequence& pairs);

// Z*(K; Δ^{[n_k]}, L_k); each L_k must differ from { } and Δ^{[n_k]}.
SimplicialComplex composition_complex(const SimplicialComplex& k,
                                      const std::vector<SimplicialComplex>& ls);

PairSequence composition_pairs(const std::vector<SimplicialComplex>& ls);

}  // namespace polyprod
