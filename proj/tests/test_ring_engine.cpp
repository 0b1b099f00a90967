#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyprod/aw_cup.hpp"
#include "polyprod/random_complex.hpp"
#include "polyprod/ring.hpp"

using namespace polyprod;

namespace {

Mask f(std::initializer_list<int> verts) { return mask_of(std::vector<int>(verts)); }

// degree-major concatenated cochain differential of a block
MatrixZ block_delta(const ChainComplex& c) {
  Index n = 0;
  for (Index d : c.dims) n += d;
  MatrixZ delta = MatrixZ::Zero(n, n);
  Index off = 0;
  for (int i = 0; i < c.degrees(); ++i) {
    Index dim = c.dims[static_cast<size_t>(i)];
    if (i + 1 < c.degrees()) {
      const MatrixZ& b = c.boundary[static_cast<size_t>(i + 1)];
      delta.block(off + dim, off, b.cols(), b.rows()) = b.transpose();
    }
    off += dim;
  }
  return delta;
}

Index block_dim(const ChainComplex& c) {
  Index n = 0;
  for (Index d : c.dims) n += d;
  return n;
}

// degree of a concatenated-basis index
int degree_of(const ChainComplex& c, Index pos) {
  for (int i = 0; i < c.degrees(); ++i) {
    if (pos < c.dims[static_cast<size_t>(i)]) return c.lo + i;
    pos -= c.dims[static_cast<size_t>(i)];
  }
  return -1;
}

}  // namespace

TEST_CASE("shuffle signs") {
  CHECK(shuffle_sign(f({1, 3}), f({2})) == -1);
  CHECK(shuffle_sign(f({1}), f({2})) == 1);
  CHECK(shuffle_sign(f({2}), f({1})) == -1);
  CHECK(shuffle_sign(0, f({1, 2})) == 1);
  // against brute-force permutation parity
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    Mask a = static_cast<Mask>(rng.below(64));
    Mask b = static_cast<Mask>(rng.below(64)) & ~a;
    std::vector<int> concat = vertices_of(a);
    for (int v : vertices_of(b)) concat.push_back(v);
    int inv = 0;
    for (size_t i = 0; i < concat.size(); ++i)
      for (size_t j = i + 1; j < concat.size(); ++j)
        if (concat[i] > concat[j]) ++inv;
    CHECK(shuffle_sign(a, b) == parity_sign(inv));
  }
}

TEST_CASE("the total product is a cochain map blockwise") {
  // δ ∘ π(x⊗y) = π(δx⊗y) + (-1)^{|x|} π(x⊗δy) for every destination block
  Rng rng(11);
  for (int t = 0; t < 12; ++t) {
    int m = 1 + static_cast<int>(rng.below(3));
    SimplicialComplex k = random_complex(rng, m);
    std::vector<IndexPair> blocks = all_index_pairs(m);
    for (int rep = 0; rep < 6; ++rep) {
      const IndexPair& s1 = blocks[rng.below(blocks.size())];
      const IndexPair& s2 = blocks[rng.below(blocks.size())];
      ChainComplex c1 = suspended_local_chain(k, s1);
      ChainComplex c2 = suspended_local_chain(k, s2);
      Index n1 = block_dim(c1), n2 = block_dim(c2);
      if (n1 == 0 || n2 == 0) continue;
      VectorZ x(n1), y(n2);
      for (Index i = 0; i < n1; ++i) x(i) = ZZ(static_cast<long long>(rng.below(5)) - 2);
      for (Index i = 0; i < n2; ++i) y(i) = ZZ(static_cast<long long>(rng.below(5)) - 2);
      // make x homogeneous to give (-1)^{|x|} a meaning
      int dx = degree_of(c1, static_cast<Index>(rng.below(static_cast<std::uint64_t>(n1))));
      for (Index i = 0; i < n1; ++i)
        if (degree_of(c1, i) != dx) x(i) = ZZ(0);
      MatrixZ d1 = block_delta(c1), d2 = block_delta(c2);
      VectorZ delta_x = d1 * x, delta_y = d2 * y;

      for (const IndexPair& dst : blocks) {
        ChainComplex cd = suspended_local_chain(k, dst);
        if (block_dim(cd) == 0) continue;
        MatrixZ p = local_product(k, s1, s2, dst, {Family::universal, false});
        auto pairing = [&](const VectorZ& a, const VectorZ& b) {
          VectorZ ab(n1 * n2);
          for (Index i = 0; i < n1; ++i)
            for (Index j = 0; j < n2; ++j) ab(i * n2 + j) = a(i) * b(j);
          return VectorZ(p * ab);
        };
        VectorZ lhs = block_delta(cd) * pairing(x, y);
        VectorZ rhs = pairing(delta_x, y);
        VectorZ alt = pairing(x, delta_y);
        rhs += (dx % 2 ? ZZ(-1) : ZZ(1)) * alt;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("inadmissible local products vanish") {
  SimplicialComplex k = SimplicialComplex::empty_complex(2);
  // destination omega not covered and the missing part not a face
  MatrixZ p = local_product(k, IndexPair(0, f({1})), IndexPair(0, f({1})),
                            IndexPair(0, f({1, 2})), {Family::universal, false});
  for (Index i = 0; i < p.rows(); ++i)
    for (Index j = 0; j < p.cols(); ++j) CHECK(p(i, j).is_zero());
}

TEST_CASE("simplex product laws") {
  // Example-style laws for K = Δ^S as a complex on [3], S = {1,2}
  const int m = 3;
  Mask s = f({1, 2});
  SimplicialComplex k = SimplicialComplex::simplex(m, s);
  for (auto fam : {Family::universal, Family::normal, Family::strictly_normal, Family::special,
                   Family::weakly_special}) {
    RingTable<QQ> t = total_cohomology_ring<QQ>(k, {fam, false}, Universe::Xm, QCtx{});
    // all blocks are one-dimensional unit classes 1_{σ,ω}, σ ⊆ S, ω ∩ S = ∅
    for (const auto& e : t.basis) {
      CHECK(subset_of(e.p.sigma, s));
      CHECK((e.p.omega & s) == 0);
      CHECK(e.degree == 0);
    }
    for (Index i = 0; i < static_cast<Index>(t.basis.size()); ++i)
      for (Index j = 0; j < static_cast<Index>(t.basis.size()); ++j) {
        const IndexPair a = t.basis[static_cast<size_t>(i)].p;
        const IndexPair b = t.basis[static_cast<size_t>(j)].p;
        std::map<Index, QQ> got;
        for (const auto& [kk, c] : t.product(i, j)) got[kk] = c;
        std::map<Index, QQ> want;
        for (Index l = 0; l < static_cast<Index>(t.basis.size()); ++l) {
          const IndexPair c = t.basis[static_cast<size_t>(l)].p;
          bool in = false;
          switch (fam) {
            case Family::universal:
            case Family::normal:
              in = subset_of(a.sigma | b.sigma, c.sigma) && subset_of(c.omega, a.omega | b.omega);
              break;
            case Family::strictly_normal:
              in = (c.sigma == (a.sigma | b.sigma)) && (c.omega == (a.omega | b.omega));
              break;
            case Family::special:
              in = (a.sigma & b.sigma) == 0 && (a.omega & b.omega) == 0 &&
                   c.sigma == (a.sigma | b.sigma) && c.omega == (a.omega | b.omega);
              break;
            case Family::weakly_special:
              in = (a.sigma & b.sigma) == 0 && (a.omega & b.omega) == 0 &&
                   c.sigma == (a.sigma | b.sigma) && subset_of(c.omega, a.omega | b.omega);
              break;
          }
          if (in) want[l] = QQ(1);
        }
        CHECK(got == want);
      }
  }
}

TEST_CASE("weakly special and special tables genuinely differ") {
  SimplicialComplex k = SimplicialComplex::empty_complex(2);
  RingTable<QQ> sp = total_cohomology_ring<QQ>(k, {Family::special, false}, Universe::Xm, QCtx{});
  RingTable<QQ> wk =
      total_cohomology_ring<QQ>(k, {Family::weakly_special, false}, Universe::Xm, QCtx{});
  Index i1 = sp.find(IndexPair(0, f({1})), 0, 0);
  Index i2 = sp.find(IndexPair(0, f({2})), 0, 0);
  REQUIRE(i1 >= 0);
  REQUIRE(i2 >= 0);
  // same basis enumeration in both tables
  CHECK(wk.find(IndexPair(0, f({1})), 0, 0) == i1);
  auto p_special = sp.product(i1, i2);
  auto p_weak = wk.product(i1, i2);
  CHECK(p_special.size() == 1);  // the single top class
  CHECK(p_weak.size() == 4);     // spreads over every ω ⊆ {1,2}
  CHECK(p_special != p_weak);
}

TEST_CASE("alexander-whitney oracle") {
  // 1 ∪ x = x on any complex
  SimplicialComplex gon = SimplicialComplex::polygon(5);
  AlgebraTable<QQ> aw = aw_cup_product<QQ>(gon, QCtx{});
  Index unit = -1;
  for (Index i = 0; i < static_cast<Index>(aw.basis.size()); ++i)
    if (aw.basis[static_cast<size_t>(i)].degree == 0) unit = i;
  REQUIRE(unit >= 0);
  for (Index i = 0; i < static_cast<Index>(aw.basis.size()); ++i) {
    auto l = aw.constants.at({unit, i});
    CHECK(l.size() == 1);
    CHECK(l[0].first == i);
    CHECK(l[0].second == QQ(1));
  }
  // a circle has no products of two degree-1 classes
  for (Index i = 0; i < static_cast<Index>(aw.basis.size()); ++i)
    for (Index j = 0; j < static_cast<Index>(aw.basis.size()); ++j)
      if (aw.basis[static_cast<size_t>(i)].degree == 1 &&
          aw.basis[static_cast<size_t>(j)].degree == 1)
        CHECK(aw.constants.find({i, j}) == aw.constants.end());

  // RP^2 over F_2: the degree-1 generator squares to the degree-2 generator
  SimplicialComplex rp2 = SimplicialComplex::from_facets(
      6, {f({1, 2, 3}), f({1, 3, 4}), f({1, 4, 5}), f({1, 5, 6}), f({1, 2, 6}), f({2, 3, 5}),
          f({3, 4, 6}), f({4, 5, 2}), f({5, 6, 3}), f({6, 2, 4})});
  AlgebraTable<Fp> awp = aw_cup_product<Fp>(rp2, FpCtx{2});
  Index one = -1, two = -1;
  int count1 = 0, count2 = 0;
  for (Index i = 0; i < static_cast<Index>(awp.basis.size()); ++i) {
    if (awp.basis[static_cast<size_t>(i)].degree == 1) {
      one = i;
      ++count1;
    }
    if (awp.basis[static_cast<size_t>(i)].degree == 2) {
      two = i;
      ++count2;
    }
  }
  REQUIRE(count1 == 1);
  REQUIRE(count2 == 1);
  auto sq = awp.constants.at({one, one});
  CHECK(sq.size() == 1);
  CHECK(sq[0].first == two);
  CHECK(sq[0].second == Fp(2, 1));
}

TEST_CASE("disk(1) ring against the staircase oracle") {
  SimplicialComplex k = SimplicialComplex::boundary_of_simplex(3, full_mask(3));
  AlgebraTable<QQ> ring = to_algebra(polyhedral_ring<QQ>(k, PairKind::Disk(1), QCtx{}), true);
  SimplicialComplex model = polyhedral_product_complex(
      k, PairSequence::uniform(3, SimplicialComplex::full_simplex(2),
                               SimplicialComplex::boundary_of_simplex(2, full_mask(2))));
  AlgebraTable<QQ> aw = aw_cup_product<QQ>(model, QCtx{});
  CHECK(ring.dims_by_degree() == aw.dims_by_degree());
  CHECK(bidegree_mult_ranks(ring) == bidegree_mult_ranks(aw));
}

TEST_CASE("sphere(r,0) ring against the staircase oracle") {
  // (S^2, S^0) over one factor: Z(K; S^2, S^0)
  for (int mcase = 0; mcase < 2; ++mcase) {
    SimplicialComplex k = mcase ? SimplicialComplex::full_simplex(1)
                                : SimplicialComplex::empty_complex(1);
    SimplicialComplex s2 = SimplicialComplex::boundary_of_simplex(4, full_mask(4));
    SimplicialComplex s0 = SimplicialComplex::from_facets(4, {f({1}), f({2})});
    AlgebraTable<QQ> ring =
        to_algebra(polyhedral_ring<QQ>(k, PairKind::Sphere(2, 0), QCtx{}), true);
    SimplicialComplex model =
        polyhedral_product_complex(k, PairSequence::uniform(1, s2, s0));
    AlgebraTable<QQ> aw = aw_cup_product<QQ>(model, QCtx{});
    CHECK(ring.dims_by_degree() == aw.dims_by_degree());
    CHECK(bidegree_mult_ranks(ring) == bidegree_mult_ranks(aw));
  }
}

TEST_CASE("diagonal tensor algebra") {
  Rng rng(31);
  auto random_table = [&](int nbasis) {
    AlgebraTable<QQ> t;
    for (int i = 0; i < nbasis; ++i) {
      AlgebraTable<QQ>::Elem e;
      e.degree = static_cast<int>(rng.below(3));
      e.diag = rng.below(3);
      e.label = "x" + std::to_string(i);
      t.basis.push_back(std::move(e));
    }
    for (Index i = 0; i < nbasis; ++i)
      for (Index j = 0; j < nbasis; ++j) {
        if (!rng.chance(1, 2)) continue;
        std::vector<std::pair<Index, QQ>> vals;
        for (Index l = 0; l < nbasis; ++l)
          if (rng.chance(1, 3))
            vals.emplace_back(l, QQ(static_cast<long long>(rng.below(5)) - 2));
        if (!vals.empty()) t.constants[{i, j}] = std::move(vals);
      }
    return t;
  };

  // B trivial one-dimensional per index, its products covering every index:
  // A ⊗̂ B is A itself
  AlgebraTable<QQ> a = random_table(5);
  AlgebraTable<QQ> b;
  for (std::uint64_t d = 0; d < 3; ++d) {
    AlgebraTable<QQ>::Elem e;
    e.degree = 0;
    e.diag = d;
    b.basis.push_back(std::move(e));
  }
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      b.constants[{i, j}] = {{0, QQ(1)}, {1, QQ(1)}, {2, QQ(1)}};
  AlgebraTable<QQ> ab = diagonal_tensor_algebra(a, b);
  CHECK(ab.basis.size() == a.basis.size());
  for (const auto& [key, vals] : a.constants) {
    std::vector<std::pair<Index, QQ>> kept;
    for (const auto& [l, c] : vals) kept.emplace_back(l, c);
    auto it = ab.constants.find(key);
    std::vector<std::pair<Index, QQ>> got =
        it == ab.constants.end() ? std::vector<std::pair<Index, QQ>>{} : it->second;
    CHECK(got == kept);
  }

  // associativity of ⊗̂ under the natural bijection of both parenthesizations
  for (int t = 0; t < 5; ++t) {
    AlgebraTable<QQ> x = random_table(4), y = random_table(4), z = random_table(4);
    AlgebraTable<QQ> lhs = diagonal_tensor_algebra(diagonal_tensor_algebra(x, y), z);
    AlgebraTable<QQ> rhs = diagonal_tensor_algebra(x, diagonal_tensor_algebra(y, z));
    CHECK(lhs.basis.size() == rhs.basis.size());
    for (size_t i = 0; i < lhs.basis.size(); ++i) {
      CHECK(lhs.basis[i].degree == rhs.basis[i].degree);
      CHECK(lhs.basis[i].diag == rhs.basis[i].diag);
    }
    CHECK(lhs.constants == rhs.constants);
  }
}

TEST_CASE("composition rings") {
  SimplicialComplex s0 = SimplicialComplex::boundary_of_simplex(2, full_mask(2));
  SimplicialComplex s1 = SimplicialComplex::boundary_of_simplex(3, full_mask(3));
  Rng rng(41);
  for (int t = 0; t < 6; ++t) {
    int m = 1 + static_cast<int>(rng.below(2));
    SimplicialComplex k = random_complex(rng, m);

    // all L_k = ∂Δ^[3]: the ring is the right special table of K under
    // a -> a ⊗ (product of the even-degree sphere classes)
    {
      std::vector<SimplicialComplex> ls(static_cast<size_t>(m), s1);
      AlgebraTable<QQ> comp = composition_ring<QQ>(k, ls, QCtx{});
      AlgebraTable<QQ> want = to_algebra(
          total_cohomology_ring<QQ>(k, {Family::special, true}, Universe::Rm, QCtx{}));
      REQUIRE(comp.basis.size() == want.basis.size());
      // bases are in matching order: A-side elements each pair with the
      // unique matching tensor of sphere classes/units
      for (size_t i = 0; i < comp.basis.size(); ++i)
        CHECK(comp.basis[i].degree ==
              want.basis[i].degree + 2 * popcount(want.basis[i].p.omega));
      CHECK(comp.constants == want.constants);
    }

    // all L_k = ∂Δ^[2]: the sphere classes have odd degree, so the identified
    // table is the right special one with the composite twist
    // (-1)^{deg(b)|ω(a)|} ⟨ω(a), ω(b)⟩ from the g-interleavings
    {
      std::vector<SimplicialComplex> ls(static_cast<size_t>(m), s0);
      AlgebraTable<QQ> comp = composition_ring<QQ>(k, ls, QCtx{});
      RingTable<QQ> base =
          total_cohomology_ring<QQ>(k, {Family::special, true}, Universe::Rm, QCtx{});
      AlgebraTable<QQ> want = to_algebra(base);
      for (auto& [key, vals] : want.constants) {
        const auto& a = base.basis[static_cast<size_t>(key.first)];
        const auto& b = base.basis[static_cast<size_t>(key.second)];
        int sign = shuffle_sign(a.p.omega, b.p.omega);
        if ((b.degree * popcount(a.p.omega)) % 2) sign = -sign;
        if (sign < 0)
          for (auto& [idx, c] : vals) c = -c;
      }
      REQUIRE(comp.basis.size() == want.basis.size());
      CHECK(comp.constants == want.constants);
    }
  }
}

TEST_CASE("composition ring against the direct ring of the composition complex") {
  SimplicialComplex s0 = SimplicialComplex::boundary_of_simplex(2, full_mask(2));
  Rng rng(47);
  for (int t = 0; t < 5; ++t) {
    int m = 1 + static_cast<int>(rng.below(2));
    SimplicialComplex k = random_complex(rng, m);
    std::vector<SimplicialComplex> ls;
    for (int i = 0; i < m; ++i) {
      int n = 1 + static_cast<int>(rng.below(3));
      SimplicialComplex l = random_complex(rng, n);
      while (l == SimplicialComplex::full_simplex(n)) l = random_complex(rng, n);
      ls.push_back(l);
    }
    AlgebraTable<QQ> comp = composition_ring<QQ>(k, ls, QCtx{});
    SimplicialComplex z = composition_complex(k, ls);
    AlgebraTable<QQ> direct = to_algebra(
        total_cohomology_ring<QQ>(z, {Family::universal, true}, Universe::Rm, QCtx{}));
    // dimensions per (block, degree) and multiplication ranks agree
    std::map<std::pair<IndexPair, int>, long> d1, d2;
    for (const auto& e : comp.basis) d1[{e.p, e.degree}]++;
    for (const auto& e : direct.basis) d2[{e.p, e.degree}]++;
    CHECK(d1 == d2);
    CHECK(bidegree_mult_ranks(comp) == bidegree_mult_ranks(direct));
  }
}
