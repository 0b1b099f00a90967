#include "polyprod/simplicial_complex.hpp"

#include <algorithm>
#include <set>

namespace polyprod {

namespace {

void check_ground(int m) {
  if (m < 0 || m > kMaxGround)
    throw InputError("ground size must be between 0 and " + std::to_string(kMaxGround));
}

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int m) {
  check_ground(m);
  SimplicialComplex k;
  k.ground_ = m;
  k.void_ = true;
  k.faces_.clear();
  return k;
}

SimplicialComplex SimplicialComplex::empty_complex(int m) {
  check_ground(m);
  SimplicialComplex k;
  k.ground_ = m;
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<Mask>& facets) {
  check_ground(m);
  SimplicialComplex k;
  k.ground_ = m;
  std::set<Mask> closure{0};
  for (Mask f : facets) {
    if (!subset_of(f, full_mask(m)))
      throw InputError("facet " + mask_to_string(f) + " exceeds ground set [" + std::to_string(m) + "]");
    for_each_subset(f, [&](Mask s) { closure.insert(s); });
  }
  k.faces_.assign(closure.begin(), closure.end());
  return k;
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::vector<Mask> faces, bool is_void) {
  check_ground(m);
  if (is_void) {
    if (!faces.empty()) throw InputError("void complex cannot carry faces");
    return void_complex(m);
  }
  SimplicialComplex k;
  k.ground_ = m;
  faces.push_back(0);
  k.faces_ = sorted_unique(std::move(faces));
  for (Mask f : k.faces_) {
    if (!subset_of(f, full_mask(m))) throw InputError("face exceeds ground set");
    Mask ff = f;
    while (ff) {
      int b = std::countr_zero(ff);
      ff &= ff - 1;
      if (!std::binary_search(k.faces_.begin(), k.faces_.end(), f & ~(Mask{1} << b)))
        throw InputError("face set is not downward closed at " + mask_to_string(f));
    }
  }
  return k;
}

SimplicialComplex SimplicialComplex::simplex(int m, Mask s) {
  check_ground(m);
  if (!subset_of(s, full_mask(m))) throw InputError("simplex exceeds ground set");
  return from_facets(m, {s});
}

SimplicialComplex SimplicialComplex::boundary_of_simplex(int m, Mask s) {
  check_ground(m);
  if (!subset_of(s, full_mask(m))) throw InputError("simplex exceeds ground set");
  if (s == 0) return void_complex(m);  // ∂Δ^∅ = { }
  std::vector<Mask> facets;
  for (int v : vertices_of(s)) facets.push_back(s & ~bit(v));
  return from_facets(m, facets);
}

SimplicialComplex SimplicialComplex::polygon(int m) {
  if (m < 3) throw InputError("polygon needs m >= 3");
  std::vector<Mask> facets;
  for (int i = 1; i < m; ++i) facets.push_back(bit(i) | bit(i + 1));
  facets.push_back(bit(m) | bit(1));
  return from_facets(m, facets);
}

bool SimplicialComplex::contains(Mask f) const {
  return !void_ && std::binary_search(faces_.begin(), faces_.end(), f);
}

Mask SimplicialComplex::vertex_support() const {
  Mask s = 0;
  for (Mask f : faces_) s |= f;
  return s;
}

int SimplicialComplex::dim() const {
  if (void_) return -2;
  int d = -1;
  for (Mask f : faces_) d = std::max(d, popcount(f) - 1);
  return d;
}

std::vector<Mask> SimplicialComplex::facets() const {
  std::vector<Mask> out;
  for (Mask f : faces_) {
    bool maximal = true;
    for (Mask g : faces_)
      if (g != f && subset_of(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Mask> SimplicialComplex::faces_of_size(int k) const {
  std::vector<Mask> out;
  for (Mask f : faces_)
    if (popcount(f) == k) out.push_back(f);
  return out;
}

std::vector<Mask> SimplicialComplex::minimal_nonfaces() const {
  if (void_) throw InputError("minimal non-faces of the void complex are undefined");
  std::vector<Mask> out;
  for (Mask s = 1; s <= full_mask(ground_); ++s) {
    if (contains(s)) continue;
    bool minimal = true;
    Mask ss = s;
    while (ss && minimal) {
      int b = std::countr_zero(ss);
      ss &= ss - 1;
      if (!contains(s & ~(Mask{1} << b))) minimal = false;
    }
    if (minimal) out.push_back(s);
    if (s == full_mask(ground_)) break;
  }
  return out;
}

PairSequence::PairSequence(std::vector<Pair> pairs) {
  entries = std::move(pairs);
  offsets.assign(1, 0);
  for (const Pair& pr : entries) {
    if (pr.x.ground_size() != pr.a.ground_size())
      throw InputError("pair (X, A): ground sizes differ");
    if (!pr.a.is_void())
      for (Mask f : pr.a.faces())
        if (!pr.x.contains(f))
          throw InputError("pair (X, A): A is not a subcomplex of X at " + mask_to_string(f));
    offsets.push_back(offsets.back() + pr.x.ground_size());
  }
  if (total_ground() > kMaxGround) throw InputError("disjoint-union ground set exceeds cap");
}

PairSequence PairSequence::uniform(int m, SimplicialComplex x, SimplicialComplex a) {
  std::vector<Pair> v(static_cast<size_t>(m), Pair{std::move(x), std::move(a)});
  return PairSequence(std::move(v));
}

Mask PairSequence::block(Mask s, int k) const {
  Mask blockmask = full_mask(offsets[k + 1]) & ~full_mask(offsets[k]);
  return (s & blockmask) >> offsets[k];
}

Mask PairSequence::embed(Mask s, int k) const { return s << offsets[k]; }

SimplicialComplex local_complex(const SimplicialComplex& k, const IndexPair& p) {
  if (k.is_void() || !k.contains(p.sigma))
    return SimplicialComplex::void_complex(k.ground_size());
  std::vector<Mask> faces;
  for_each_subset(p.omega, [&](Mask t) {
    if (k.contains(t | p.sigma)) faces.push_back(t);
  });
  return SimplicialComplex::from_faces(k.ground_size(), std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& k, Mask s) {
  return local_complex(k, IndexPair(s, full_mask(k.ground_size()) & ~s));
}

SimplicialComplex restriction(const SimplicialComplex& k, Mask s) {
  return local_complex(k, IndexPair(0, s));
}

SimplicialComplex alexander_dual(const SimplicialComplex& k, Mask s) {
  if (s == 0) throw InputError("Alexander dual: S must be nonempty");
  if (!k.is_void() && !subset_of(k.vertex_support(), s))
    throw InputError("Alexander dual: vertex set of K must lie in S");
  std::vector<Mask> faces;
  for_each_subset(s, [&](Mask t) {
    if (!k.contains(t)) faces.push_back(s & ~t);
  });
  if (faces.empty()) return SimplicialComplex::void_complex(k.ground_size());
  // downward closure is automatic; assemble directly
  return SimplicialComplex::from_faces(k.ground_size(), std::move(faces));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.ground_size() != b.ground_size()) throw InputError("union: ground sets differ");
  if (a.is_void()) return b;
  if (b.is_void()) return a;
  std::vector<Mask> faces = a.faces();
  faces.insert(faces.end(), b.faces().begin(), b.faces().end());
  return SimplicialComplex::from_faces(a.ground_size(), std::move(faces));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.ground_size() != b.ground_size()) throw InputError("intersection: ground sets differ");
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.ground_size());
  std::vector<Mask> faces;
  for (Mask f : a.faces())
    if (b.contains(f)) faces.push_back(f);
  return SimplicialComplex::from_faces(a.ground_size(), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  int m = x.ground_size() + y.ground_size();
  check_ground(m);
  if (x.is_void() || y.is_void()) return SimplicialComplex::void_complex(m);
  std::vector<Mask> faces;
  faces.reserve(x.faces().size() * y.faces().size());
  for (Mask f : x.faces())
    for (Mask g : y.faces()) faces.push_back(f | (g << x.ground_size()));
  return SimplicialComplex::from_faces(m, std::move(faces));
}

SimplicialComplex staircase_product(const SimplicialComplex& x, const SimplicialComplex& y) {
  if (x.is_void() || y.is_void())
    throw InputError("staircase product of a void complex is undefined");
  const int ms = x.ground_size(), mt = y.ground_size();
  const int m = ms * mt;
  check_ground(m);
  auto vertex = [&](int i, int j) { return (i - 1) * mt + j; };  // 1-based

  // faces = chains in the componentwise order whose projections are faces;
  // grow chains from their lexicographically largest element
  struct Node {
    std::vector<std::pair<int, int>> chain;
    Mask proj_x, proj_y;
  };
  std::vector<Mask> faces{0};
  std::vector<Node> frontier{{{}, 0, 0}};
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& nd : frontier) {
      const int li = nd.chain.empty() ? 1 : nd.chain.back().first;
      const int lj = nd.chain.empty() ? 1 : nd.chain.back().second;
      for (int i = li; i <= ms; ++i) {
        for (int j = lj; j <= mt; ++j) {
          if (!nd.chain.empty() && i == li && j == lj) continue;  // distinct elements
          Mask px = nd.proj_x | bit(i), py = nd.proj_y | bit(j);
          if (!x.contains(px) || !y.contains(py)) continue;
          Node ext = nd;
          ext.chain.emplace_back(i, j);
          ext.proj_x = px;
          ext.proj_y = py;
          Mask face = 0;
          for (auto [a, b] : ext.chain) face |= bit(vertex(a, b));
          faces.push_back(face);
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return SimplicialComplex::from_faces(m, std::move(faces));
}

namespace {

SimplicialComplex join_fold(const std::vector<const SimplicialComplex*>& factors) {
  SimplicialComplex acc = SimplicialComplex::empty_complex(0);
  for (const SimplicialComplex* f : factors) acc = join(acc, *f);
  return acc;
}

}  // namespace

SimplicialComplex polyhedral_join(const SimplicialComplex& k, const PairSequence& pairs) {
  if (k.ground_size() != pairs.size())
    throw InputError("polyhedral join: K must live on [m] with m = number of pairs");
  const int n = pairs.total_ground();
  if (k.is_void()) return SimplicialComplex::void_complex(n);
  SimplicialComplex out = SimplicialComplex::void_complex(n);
  for (Mask tau : k.faces()) {
    std::vector<const SimplicialComplex*> factors;
    for (int i = 0; i < pairs.size(); ++i)
      factors.push_back((tau & bit(i + 1)) ? &pairs.entries[i].x : &pairs.entries[i].a);
    out = complex_union(out, join_fold(factors));
  }
  return out;
}

SimplicialComplex polyhedral_product_complex(const SimplicialComplex& k,
                                             const PairSequence& pairs) {
  if (k.ground_size() != pairs.size())
    throw InputError("polyhedral product: K must live on [m] with m = number of pairs");
  for (const auto& pr : pairs.entries)
    if (pr.x.is_void()) throw InputError("polyhedral product: X_k must be non-void");
  // ground size of the iterated staircase product
  long long n = 1;
  for (const auto& pr : pairs.entries) n *= std::max(1, pr.x.ground_size());
  if (n > kMaxGround) throw InputError("polyhedral product: staircase ground set exceeds cap");
  SimplicialComplex out = SimplicialComplex::empty_complex(static_cast<int>(n));
  if (k.is_void()) return out;
  for (Mask tau : k.faces()) {
    SimplicialComplex d = SimplicialComplex::empty_complex(1);
    bool first = true;
    bool dead = false;
    for (int i = 0; i < pairs.size() && !dead; ++i) {
      const SimplicialComplex& y = (tau & bit(i + 1)) ? pairs.entries[i].x : pairs.entries[i].a;
      if (y.is_void()) {
        dead = true;  // empty factor: this summand contributes nothing
        break;
      }
      d = first ? y : staircase_product(d, y);
      first = false;
    }
    if (dead) continue;
    if (d.ground_size() != out.ground_size())
      throw InvariantViolation("polyhedral product: staircase ground mismatch");
    out = complex_union(out, d);
  }
  return out;
}

PairSequence composition_pairs(const std::vector<SimplicialComplex>& ls) {
  std::vector<PairSequence::Pair> pairs;
  for (const SimplicialComplex& l : ls) {
    int n = l.ground_size();
    if (l.is_void() || l == SimplicialComplex::simplex(n, full_mask(n)))
      throw InputError("composition complex: L_k must differ from { } and the full simplex");
    pairs.push_back({SimplicialComplex::full_simplex(n), l});
  }
  return PairSequence(std::move(pairs));
}

SimplicialComplex composition_complex(const SimplicialComplex& k,
                                      const std::vector<SimplicialComplex>& ls) {
  return polyhedral_join(k, composition_pairs(ls));
}

}  // namespace polyprod
