#pragma once

#include "polyprod/simplicial_complex.hpp"

namespace polyprod {

// splitmix64: tiny, fully portable generator so that seeded sweeps produce
// byte-identical results across platforms and standard libraries.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  bool chance(int num, int den) { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }
};

// Downward closure of a random facet list; may be {∅}, never void.
inline SimplicialComplex random_complex(Rng& rng, int m) {
  int facet_count = static_cast<int>(rng.below(static_cast<std::uint64_t>(m + 2)));
  std::vector<Mask> facets;
  for (int i = 0; i < facet_count; ++i)
    facets.push_back(static_cast<Mask>(rng.below(full_mask(m) + 1)));
  return SimplicialComplex::from_facets(m, facets);
}

// A complex different from { } and the full simplex.
inline SimplicialComplex random_proper_complex(Rng& rng, int m) {
  while (true) {
    SimplicialComplex k = random_complex(rng, m);
    if (k != SimplicialComplex::full_simplex(m)) return k;
  }
}

// A random subcomplex of X: downward closure of a random subset of its faces.
inline SimplicialComplex random_subcomplex(Rng& rng, const SimplicialComplex& x) {
  std::vector<Mask> facets;
  for (Mask f : x.faces())
    if (rng.chance(1, 2)) facets.push_back(f);
  return SimplicialComplex::from_facets(x.ground_size(), facets);
}

// Every simplicial complex on [m] (downward-closed face sets), the void
// complex included; m <= 4.
std::vector<SimplicialComplex> all_complexes(int m);

}  // namespace polyprod
