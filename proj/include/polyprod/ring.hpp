#pragma once

#include <functional>

#include "polyprod/decomposition.hpp"

namespace polyprod {

// ---------------------------------------------------------------------------
// Product families. Local products are either the universal one or zero; the
// admissibility masks follow the family tables. Right variants force
// σ = σ' = σ'' = ∅.
// ---------------------------------------------------------------------------
enum class Family { universal, normal, strictly_normal, special, weakly_special };

struct ProductFamily {
  Family family = Family::universal;
  bool right = false;

  friend bool operator==(const ProductFamily& a, const ProductFamily& b) {
    return a.family == b.family && a.right == b.right;
  }
};

// Elements of ω(dst) outside ω'∪ω'' and of (σ'∪σ'')∖σ are forced into every
// contributing generator; they make the universal product non-degree-preserving.
inline Mask forced_elements(const IndexPair& dst, const IndexPair& s1, const IndexPair& s2) {
  return ((s1.sigma | s2.sigma) & ~dst.sigma) | (dst.omega & ~(s1.omega | s2.omega));
}

bool family_admissible(const SimplicialComplex& k, const IndexPair& dst, const IndexPair& s1,
                       const IndexPair& s2, ProductFamily f);

// The local product as an integer matrix on total-cochain bases: rows run over
// the dst block basis (degree-major, labels ascending), columns over pairs
// (i1, i2) with i2 fastest. Zero when the family mask rejects the triple.
MatrixZ local_product(const SimplicialComplex& k, const IndexPair& s1, const IndexPair& s2,
                      const IndexPair& dst, ProductFamily f);

// ---------------------------------------------------------------------------
// Cocycle bases per block and the class-level product tables.
// ---------------------------------------------------------------------------

// Cochain data of one (σ,ω) block over a field: the chain complex, a
// label lookup, and per-degree cohomology bases with projection maps. The
// cochain differential is the transposed boundary; all Koszul signs live in
// the coproduct.
template <typename F>
struct BlockRing {
  IndexPair p;
  ChainComplex chain;  // suspended local chain, labels = N̄ masks
  std::vector<SubquotientBasis<F>> h;  // per degree (index d - chain.lo)

  Index hdim(int d) const {
    int i = d - chain.lo;
    return (i >= 0 && i < static_cast<int>(h.size())) ? h[static_cast<size_t>(i)].dim() : 0;
  }
  const std::vector<Mask>& labels_at(int d) const {
    static const std::vector<Mask> none;
    int i = d - chain.lo;
    return (i >= 0 && i < static_cast<int>(chain.labels.size()))
               ? chain.labels[static_cast<size_t>(i)]
               : none;
  }
  Index label_pos(int d, Mask t) const {
    const auto& l = labels_at(d);
    auto it = std::lower_bound(l.begin(), l.end(), t);
    return (it != l.end() && *it == t) ? static_cast<Index>(it - l.begin()) : -1;
  }
};

template <typename F>
BlockRing<F> make_block_ring(const SimplicialComplex& k, const IndexPair& p,
                             const typename FieldOps<F>::Ctx& ctx);

// Basis-indexed sparse structure constants of the total cohomology algebra.
template <typename F>
struct RingTable {
  ProductFamily family;
  Coefficients coeffs;
  struct Elem {
    IndexPair p;
    int degree = 0;        // total-complex degree
    int space_degree = 0;  // after the geometric re-indexing, when applicable
    Index block = 0;       // index into blocks
    Index local = 0;       // column of the block cohomology basis at `degree`
  };
  std::vector<Elem> basis;
  std::vector<BlockRing<F>> blocks;
  std::map<std::pair<Index, Index>, std::vector<std::pair<Index, F>>> constants;

  Vector<F> rep(Index i) const {
    const Elem& e = basis[static_cast<size_t>(i)];
    return blocks[static_cast<size_t>(e.block)]
        .h[static_cast<size_t>(e.degree - blocks[static_cast<size_t>(e.block)].chain.lo)]
        .reps()
        .col(e.local);
  }
  std::vector<std::pair<Index, F>> product(Index i, Index j) const {
    auto it = constants.find({i, j});
    return it == constants.end() ? std::vector<std::pair<Index, F>>{} : it->second;
  }
  // index of the basis element at (p, degree, local), -1 if absent
  Index find(const IndexPair& p, int degree, Index local) const {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i].p == p && basis[i].degree == degree && basis[i].local == local)
        return static_cast<Index>(i);
    return -1;
  }
};

// Cocycle bases per block, products of representatives through the local
// product summed over admissible destinations, expressed in the cohomology
// bases. Field coefficients only.
template <typename F>
RingTable<F> total_cohomology_ring(const SimplicialComplex& k, ProductFamily family, Universe u,
                                   const typename FieldOps<F>::Ctx& ctx);

// Class coordinates of an explicit cocycle in a block at one degree.
template <typename F>
std::map<Index, F> ring_class(const RingTable<F>& t, const IndexPair& p, int degree,
                              const Vector<F>& cocycle);

// Bilinear product of two classes given as basis-coefficient maps.
template <typename F>
std::map<Index, F> ring_multiply(const RingTable<F>& t, const std::map<Index, F>& a,
                                 const std::map<Index, F>& b);

// ---------------------------------------------------------------------------
// Geometric pair kinds of the disk/sphere product rings.
// ---------------------------------------------------------------------------
struct PairKind {
  enum Kind { disk, sphere } kind = disk;
  int n = 1;        // disk dimension
  int r = 2, p = 0;  // sphere pair (r, p), 0 <= p < r

  static PairKind Disk(int n) {
    if (n < 1) throw InputError("disk pair needs n >= 1");
    return {disk, n, 0, 0};
  }
  static PairKind Sphere(int r, int p) {
    if (!(0 <= p && p < r)) throw InputError("sphere pair needs 0 <= p < r");
    return {sphere, 0, r, p};
  }
};

// The cohomology ring of the polyhedral product over (D^n, S^{n-1}) or
// (S^r, S^p) pairs: the family table with the printed sign twist and the
// degree re-indexing.
template <typename F>
RingTable<F> polyhedral_ring(const SimplicialComplex& k, PairKind kind,
                             const typename FieldOps<F>::Ctx& ctx);

// ---------------------------------------------------------------------------
// Basis-and-constants view used for tensor constructions and comparisons.
// ---------------------------------------------------------------------------
template <typename F>
struct AlgebraTable {
  struct Elem {
    IndexPair p;
    int degree = 0;
    std::uint64_t diag = 0;  // diagonal index key
    std::string label;
  };
  std::vector<Elem> basis;
  std::map<std::pair<Index, Index>, std::vector<std::pair<Index, F>>> constants;

  std::map<int, long> dims_by_degree() const {
    std::map<int, long> out;
    for (const Elem& e : basis) out[e.degree] += 1;
    return out;
  }
};

// Forget representatives; diag key packs (σ,ω); degrees by total or space grading.
template <typename F>
AlgebraTable<F> to_algebra(const RingTable<F>& t, bool use_space_degree = false);

// Tensor product algebra with the Koszul sign (−1)^{|a''||b'|}; the second
// factor's index pairs are shifted by `ground_shift` onto a disjoint block.
template <typename F>
AlgebraTable<F> tensor_algebra(const AlgebraTable<F>& a, const AlgebraTable<F>& b,
                               int ground_shift);

// Diagonal tensor product algebra: basis pairs with equal diag keys, products
// (∇_A ⊗̂ ∇_B) with the Koszul sign; mismatched diagonal components vanish.
// The result's index pairs come from the A side unless keep_b_pair is set.
template <typename F>
AlgebraTable<F> diagonal_tensor_algebra(const AlgebraTable<F>& a, const AlgebraTable<F>& b,
                                        bool keep_b_pair = false);

// Right total cohomology ring of the composition complex Z*(K;L̲) as the
// diagonal tensor product H*_{R_m}(K) ⊗̂ (⊗_k H*_{R_{n_k}}(L_k)); the diagonal
// matches ω(a) with {k : ω_k(b) ≠ ∅}. Index pairs of the result live on [n].
template <typename F>
AlgebraTable<F> composition_ring(const SimplicialComplex& k,
                                 const std::vector<SimplicialComplex>& ls,
                                 const typename FieldOps<F>::Ctx& ctx);

// Isomorphism-invariant comparison data: ranks of the multiplication maps
// H^i ⊗ H^j -> H^* per bidegree (i, j). Zero maps are dropped.
template <typename F>
std::map<std::pair<int, int>, Index> bidegree_mult_ranks(const AlgebraTable<F>& t);

}  // namespace polyprod

#include "polyprod/ring_impl.hpp"
