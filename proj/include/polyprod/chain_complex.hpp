#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyprod/linalg.hpp"
#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

// Graded free modules with integral boundary matrices. The entries are exact
// in every coefficient system used here, so the coefficient choice is a tag
// consulted by the homology routines. Out-of-range boundary maps are zero.
struct ChainComplex {
  Coefficients coeffs = Coefficients::Z();
  int lo = 0;
  std::vector<Index> dims;          // dims[i] = dim C_{lo+i}
  std::vector<MatrixZ> boundary;    // boundary[i]: C_{lo+i} -> C_{lo+i-1}; boundary[0] has 0 rows
  std::vector<std::vector<Mask>> labels;  // optional per-degree basis labels

  int degrees() const { return static_cast<int>(dims.size()); }
  int hi() const { return lo + degrees() - 1; }
  bool empty() const { return dims.empty(); }
  Index dim(int d) const {
    int i = d - lo;
    return (i >= 0 && i < degrees()) ? dims[static_cast<size_t>(i)] : 0;
  }
  const MatrixZ* boundary_at(int d) const {
    int i = d - lo;
    return (i >= 0 && i < degrees()) ? &boundary[static_cast<size_t>(i)] : nullptr;
  }
  // asserts d∘d = 0 and shape consistency
  void validate() const;
};

enum class ChainVariant { plain, reduced, suspended_reduced };

// Ascending-vertex-order simplicial chains of K. Degree of a face f:
//   plain: |f|-1 (empty face dropped), reduced: |f|-1 (with ∅ in degree -1),
//   suspended_reduced: |f| (Σ C̃, a face sits in degree |f|).
ChainComplex simplicial_chain(const SimplicialComplex& k, ChainVariant variant,
                              Coefficients coeffs = Coefficients::Z());

// Tensor product with the Koszul sign d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);

// -- homology ----------------------------------------------------------------

struct DegreeSummary {
  long free_rank = 0;
  std::vector<ZZ> torsion;  // sorted, each dividing the next, entries > 1

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const DegreeSummary& a, const DegreeSummary& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

struct HomologySummary {
  Coefficients coeffs;
  std::map<int, DegreeSummary> groups;  // nonzero degrees only

  DegreeSummary at(int d) const {
    auto it = groups.find(d);
    return it == groups.end() ? DegreeSummary{} : it->second;
  }
  void set(int d, DegreeSummary s) {
    if (!s.is_zero()) groups[d] = std::move(s);
  }
  bool is_zero() const { return groups.empty(); }
  long total_rank() const {
    long r = 0;
    for (const auto& [d, g] : groups) r += g.free_rank;
    return r;
  }
  // degree-shifted copy
  HomologySummary shifted(int by) const {
    HomologySummary out;
    out.coeffs = coeffs;
    for (const auto& [d, g] : groups) out.groups[d + by] = g;
    return out;
  }
  friend bool operator==(const HomologySummary& a, const HomologySummary& b) {
    return a.groups == b.groups;
  }
  std::string str() const;
};

HomologySummary homology(const ChainComplex& c);
HomologySummary cohomology(const ChainComplex& c);

// Kernel-of-outgoing over image-of-incoming for one degree.
DegreeSummary homology_at(const ChainComplex& c, int d);

// Reduced (co)homology of a complex in one call, with the stated coefficients.
HomologySummary reduced_homology(const SimplicialComplex& k, Coefficients coeffs);
HomologySummary reduced_cohomology(const SimplicialComplex& k, Coefficients coeffs);

// -- explicit homology bases over Z (free case) ------------------------------

// Cycle representatives of a basis of H_d together with the coordinate map,
// valid when H_d is torsion-free in the consulted range. Used to realize
// inclusion-induced maps on homology.
struct FreeHomologyBasis {
  bool torsion_free = true;
  std::vector<MatrixZ> cycles;       // per degree: n_d x betti_d cycle columns
  std::vector<MatrixZ> coord_maps;   // per degree: betti_d x n_d, class = map * cycle
  int lo = 0;

  Index betti(int d) const {
    int i = d - lo;
    return (i >= 0 && i < static_cast<int>(cycles.size())) ? cycles[static_cast<size_t>(i)].cols()
                                                           : 0;
  }
};

FreeHomologyBasis integral_homology_basis(const ChainComplex& c);

}  // namespace polyprod
