#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "polyprod/errors.hpp"

namespace polyprod {

// Vertex subsets of [m] as bitmasks, vertex i <-> bit (i-1). Hard cap m <= 32.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 32;

inline int popcount(Mask s) { return std::popcount(s); }

inline Mask full_mask(int m) { return (m == 0) ? 0 : ((Mask{1} << m) - 1); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask bit(int vertex) { return Mask{1} << (vertex - 1); }

// Vertices of a mask in ascending order (1-based).
inline std::vector<int> vertices_of(Mask s) {
  std::vector<int> out;
  while (s) {
    int b = std::countr_zero(s);
    out.push_back(b + 1);
    s &= s - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& verts) {
  Mask s = 0;
  for (int v : verts) {
    if (v < 1 || v > kMaxGround) throw InputError("vertex out of range: " + std::to_string(v));
    s |= bit(v);
  }
  return s;
}

// Number of elements of s strictly below vertex v: the index of v in the
// ascending listing of s (when v in s).
inline int rank_in(Mask s, int vertex) { return popcount(s & (bit(vertex) - 1)); }

// Sign (-1)^k for integer k.
inline int parity_sign(int k) { return (k & 1) ? -1 : 1; }

// Shuffle sign <A,B>: the sign of the permutation sorting the concatenation
// of the ascending lists of the disjoint sets A and B, i.e. (-1)^(inversions).
inline int shuffle_sign(Mask a, Mask b) {
  int inv = 0;
  Mask bb = b;
  while (bb) {
    int v = std::countr_zero(bb) + 1;
    // elements of a greater than v
    inv += popcount(a & ~(bit(v) | (bit(v) - 1)));
    bb &= bb - 1;
  }
  return parity_sign(inv);
}

// Iterate all subsets of `set` (including 0 and `set` itself), ascending is
// not guaranteed; use collect_subsets for a sorted list.
template <typename Fn>
inline void for_each_subset(Mask set, Fn&& fn) {
  Mask s = set;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & set;
  }
}

inline std::vector<Mask> collect_subsets(Mask set) {
  std::vector<Mask> out;
  for_each_subset(set, [&](Mask s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string mask_to_string(Mask s) {
  if (s == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (int v : vertices_of(s)) {
    if (!first) out += " ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Disjoint pair (sigma, omega) indexing local complexes; member of X_m.
struct IndexPair {
  Mask sigma = 0;
  Mask omega = 0;

  IndexPair() = default;
  IndexPair(Mask s, Mask w) : sigma(s), omega(w) {
    if (s & w) throw InputError("IndexPair: sigma and omega must be disjoint");
  }

  Mask sigma_prime(int m) const { return full_mask(m) & ~(sigma | omega); }

  friend bool operator==(const IndexPair& a, const IndexPair& b) {
    return a.sigma == b.sigma && a.omega == b.omega;
  }
  friend bool operator<(const IndexPair& a, const IndexPair& b) {
    return a.sigma != b.sigma ? a.sigma < b.sigma : a.omega < b.omega;
  }
};

// All (sigma, omega) in X_m, sorted. 3^m pairs; practical cap m <= 12.
inline std::vector<IndexPair> all_index_pairs(int m) {
  if (m > 12) throw InputError("index-pair enumeration capped at m <= 12");
  std::vector<IndexPair> out;
  Mask ground = full_mask(m);
  for (Mask sigma = 0; sigma <= ground; ++sigma) {
    for_each_subset(ground & ~sigma, [&](Mask omega) { out.emplace_back(sigma, omega); });
    if (ground == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyprod
