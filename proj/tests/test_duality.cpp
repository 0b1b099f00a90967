#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyprod/duality.hpp"
#include "polyprod/random_complex.hpp"

using namespace polyprod;

namespace {
Mask f(std::initializer_list<int> verts) { return mask_of(std::vector<int>(verts)); }
}

TEST_CASE("local duality identity") {
  SimplicialComplex gon = SimplicialComplex::polygon(4);
  CHECK(dual_local_identity(gon, IndexPair(0, full_mask(4))));
  // both sides are the two disjoint edges
  SimplicialComplex lhs = alexander_dual(local_complex(gon, IndexPair(0, full_mask(4))),
                                         full_mask(4));
  CHECK(lhs == SimplicialComplex::from_facets(4, {f({1, 3}), f({2, 4})}));

  // sigma not a face: both sides the full simplex on omega
  SimplicialComplex k = SimplicialComplex::empty_complex(3);
  IndexPair p(f({1}), f({2, 3}));
  CHECK(dual_local_identity(k, p));
  CHECK(alexander_dual(local_complex(k, p), p.omega) ==
        SimplicialComplex::simplex(3, f({2, 3})));

  // simplex specials
  for (Mask s = 0; s <= full_mask(3); ++s) {
    SimplicialComplex ds = SimplicialComplex::simplex(3, s);
    for (const IndexPair& q : all_index_pairs(3))
      if (q.omega != 0) CHECK(dual_local_identity(ds, q));
    if (s == full_mask(3)) break;
  }
}

TEST_CASE("gamma certificates over the integers") {
  SimplicialComplex gon = SimplicialComplex::polygon(4);
  DualityCertificate c = gamma_certificate(gon, IndexPair(0, full_mask(4)), Coefficients::Z());
  CHECK(c.matched);
  CHECK(c.left.at(2) == DegreeSummary{1, {}});   // H_2 block = Z
  CHECK(c.right.at(1) == DegreeSummary{1, {}});  // H^1 of the two disjoint edges

  // sigma not a face: both sides zero
  DualityCertificate cz =
      gamma_certificate(SimplicialComplex::empty_complex(2), IndexPair(f({1}), f({2})),
                        Coefficients::Z());
  CHECK(cz.matched);
  CHECK(cz.left.is_zero());
  CHECK(cz.right.is_zero());

  // boundary-of-simplex blocks pair with the dual empty-complex blocks
  for (Mask s = 1; s <= full_mask(4); ++s) {
    SimplicialComplex k = SimplicialComplex::boundary_of_simplex(4, s);
    for (const IndexPair& p : all_index_pairs(4))
      if (p.omega != 0) CHECK(gamma_certificate(k, p, Coefficients::Z()).matched);
    if (s == full_mask(4)) break;
  }
}

TEST_CASE("gamma involutivity at the summary level") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    int m = 1 + static_cast<int>(rng.below(4));
    SimplicialComplex k = random_complex(rng, m);
    SimplicialComplex dual = alexander_dual(k, full_mask(m));
    for (const IndexPair& p : all_index_pairs(m)) {
      if (p.omega == 0) continue;
      DualityCertificate there = gamma_certificate(k, p, Coefficients::Z());
      DualityCertificate back =
          gamma_certificate(dual, IndexPair(p.sigma_prime(m), p.omega), Coefficients::Z());
      CHECK(there.matched);
      CHECK(back.matched);
      // γ∘γ-type involutivity: coming back reproduces the original summary
      CHECK(back.right == [&] {
        HomologySummary h;
        h.coeffs = Coefficients::Z();
        return cohomology(suspended_local_chain(k, p));
      }());
    }
  }
}

TEST_CASE("gamma matrices over fields are isomorphisms") {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    int m = 1 + static_cast<int>(rng.below(4));
    SimplicialComplex k = random_complex(rng, m);
    for (const IndexPair& p : all_index_pairs(m)) {
      if (p.omega == 0) continue;
      DualityCertificate cq = gamma_certificate(k, p, Coefficients::Q());
      if (cq.has_matrices) CHECK(cq.matrices_invertible);
      DualityCertificate c2 = gamma_certificate(k, p, Coefficients::F(2));
      if (c2.has_matrices) CHECK(c2.matrices_invertible);
    }
  }
}

TEST_CASE("composition duality") {
  SimplicialComplex s0 = SimplicialComplex::boundary_of_simplex(2, full_mask(2));
  CHECK(composition_dual_identity(s0, {s0, s0}));
  // the dual of ∂Δ^[4] is {∅}
  SimplicialComplex z = composition_complex(s0, {s0, s0});
  CHECK(alexander_dual(z, full_mask(4)) == SimplicialComplex::empty_complex(4));

  // self-dual inputs remain self dual: K = {∅,{1}} on [2] is self dual
  SimplicialComplex sd = SimplicialComplex::from_facets(2, {f({1})});
  CHECK(alexander_dual(sd, full_mask(2)) == sd);
  SimplicialComplex zz = composition_complex(sd, {sd, sd});
  CHECK(alexander_dual(zz, full_mask(zz.ground_size())) == zz);

  // K = Δ^[m]: both sides void
  CHECK(composition_dual_identity(SimplicialComplex::full_simplex(2), {s0, s0}));
}

TEST_CASE("gamma tensor compatibility on composition blocks") {
  SimplicialComplex s0 = SimplicialComplex::boundary_of_simplex(2, full_mask(2));
  // the top block of Z*(∂Δ^[2]; ∂Δ^[2], ∂Δ^[2])
  CHECK(gamma_tensor_compat(s0, {s0, s0}, IndexPair(0, full_mask(4)), Coefficients::Q()));

  Rng rng(21);
  for (int t = 0; t < 8; ++t) {
    int m = 1 + static_cast<int>(rng.below(2));
    SimplicialComplex k = random_complex(rng, m);
    std::vector<SimplicialComplex> ls;
    for (int i = 0; i < m; ++i) {
      int n = 1 + static_cast<int>(rng.below(3));
      SimplicialComplex l = random_complex(rng, n);
      while (l == SimplicialComplex::full_simplex(n)) l = random_complex(rng, n);
      ls.push_back(l);
    }
    PairSequence pairs = composition_pairs(ls);
    int n = pairs.total_ground();
    Rng rng2(static_cast<std::uint64_t>(t) * 77 + 5);
    for (int rep = 0; rep < 10; ++rep) {
      Mask sigma = static_cast<Mask>(rng2.below(full_mask(n) + 1));
      Mask omega = static_cast<Mask>(rng2.below(full_mask(n) + 1)) & ~sigma;
      if (omega == 0) continue;
      CHECK(gamma_tensor_compat(k, ls, IndexPair(sigma, omega), Coefficients::Q()));
    }
  }
}
