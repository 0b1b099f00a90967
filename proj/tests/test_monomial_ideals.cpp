#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyprod/monomial_ideal.hpp"
#include "polyprod/random_complex.hpp"

using namespace polyprod;

namespace {
Mask f(std::initializer_list<int> verts) { return mask_of(std::vector<int>(verts)); }
}

TEST_CASE("stanley-reisner generators") {
  SimplicialComplex s0 = SimplicialComplex::boundary_of_simplex(2, full_mask(2));
  MonomialIdeal i1 = stanley_reisner(s0, {1, 1});
  CHECK(i1.gens == std::vector<Expvec>{{1, 1}});
  MonomialIdeal i2 = stanley_reisner(s0, {2, 3});
  CHECK(i2.gens == std::vector<Expvec>{{2, 3}});

  MonomialIdeal gon = stanley_reisner(SimplicialComplex::polygon(4), {1, 1, 1, 1});
  CHECK(gon.gens == std::vector<Expvec>({{0, 1, 0, 1}, {1, 0, 1, 0}}));

  CHECK_THROWS_AS(stanley_reisner(SimplicialComplex::void_complex(2), {1, 1}), InputError);
  CHECK_THROWS_AS(stanley_reisner(SimplicialComplex::full_simplex(2), {1, 1}), InputError);
}

TEST_CASE("taylor tor of small ideals") {
  // principal ideal: Tor_0(I,k) = k at its multidegree, nothing above
  MonomialIdeal principal = MonomialIdeal::from_generators(2, {{1, 1}});
  BettiTable t = taylor_tor(principal, TorModule::ideal, Coefficients::Q());
  BettiTable want;
  want.add(0, {1, 1}, 1);
  CHECK(t == want);

  // two coprime generators: the Koszul syzygy
  MonomialIdeal two = MonomialIdeal::from_generators(4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  BettiTable t2 = taylor_tor(two, TorModule::ideal, Coefficients::Q());
  BettiTable want2;
  want2.add(0, {1, 0, 1, 0}, 1);
  want2.add(0, {0, 1, 0, 1}, 1);
  want2.add(1, {1, 1, 1, 1}, 1);
  CHECK(t2 == want2);

  // zero ideal
  CHECK(taylor_tor(MonomialIdeal::from_generators(3, {}), TorModule::ideal, Coefficients::Q())
            .entries.empty());

  // quotient-module shift
  BettiTable q = taylor_tor(two, TorModule::quotient, Coefficients::Q());
  CHECK(q.entries.at({0, Expvec{0, 0, 0, 0}}) == 1);
  CHECK(q.entries.at({1, Expvec{1, 0, 1, 0}}) == 1);
  CHECK(q.entries.at({2, Expvec{1, 1, 1, 1}}) == 1);
}

TEST_CASE("tor is independent of generator order") {
  std::vector<Expvec> gens = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {2, 0, 0}};
  MonomialIdeal a = MonomialIdeal::from_generators(3, gens);
  std::reverse(gens.begin(), gens.end());
  MonomialIdeal b = MonomialIdeal::from_generators(3, gens);
  CHECK(a == b);
  CHECK(taylor_tor(a, TorModule::ideal, Coefficients::F(2)) ==
        taylor_tor(b, TorModule::ideal, Coefficients::F(2)));
}

TEST_CASE("hochster identity on the named instances") {
  SimplicialComplex s0 = SimplicialComplex::boundary_of_simplex(2, full_mask(2));
  HochsterResult h = hochster_check(s0, {1, 1}, Coefficients::Q());
  CHECK(h.match);
  BettiTable want;
  want.add(0, {1, 1}, 1);
  CHECK(h.taylor == want);

  HochsterResult gon = hochster_check(SimplicialComplex::polygon(4), {1, 1, 1, 1},
                                      Coefficients::Q());
  CHECK(gon.match);
  GradedRanks totals = gon.taylor.totals();
  CHECK(totals.at(0) == 2);
  CHECK(totals.at(1) == 1);

  // contractible full subcomplexes contribute nothing: random sweep
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    int m = 2 + static_cast<int>(rng.below(4));
    SimplicialComplex k = random_proper_complex(rng, m);
    Expvec r(static_cast<size_t>(m));
    for (auto& e : r) e = 1 + static_cast<int>(rng.below(3));
    CHECK(hochster_check(k, r, Coefficients::Q()).match);
    CHECK(hochster_check(k, r, Coefficients::F(2)).match);
  }
}

TEST_CASE("hochster tables see characteristic") {
  // the projective-plane ideal has an extra F_2 syzygy
  SimplicialComplex rp2 = SimplicialComplex::from_facets(
      6, {f({1, 2, 3}), f({1, 3, 4}), f({1, 4, 5}), f({1, 5, 6}), f({1, 2, 6}), f({2, 3, 5}),
          f({3, 4, 6}), f({4, 5, 2}), f({5, 6, 3}), f({6, 2, 4})});
  Expvec ones(6, 1);
  CHECK(hochster_check(rp2, ones, Coefficients::Q()).match);
  CHECK(hochster_check(rp2, ones, Coefficients::F(2)).match);
  GradedRanks tq = taylor_tor(stanley_reisner(rp2, ones), TorModule::ideal, Coefficients::Q()).totals();
  GradedRanks t2 = taylor_tor(stanley_reisner(rp2, ones), TorModule::ideal, Coefficients::F(2)).totals();
  CHECK(tq.ranks != t2.ranks);
}

TEST_CASE("composition ideals") {
  // m = 1, K = {∅}: the composition is I_1 itself
  SimplicialComplex pt = SimplicialComplex::empty_complex(1);
  SimplicialComplex l = SimplicialComplex::polygon(4);
  CompositionIdealResult r1 = composition_ideal(pt, {l}, {Expvec{1, 1, 1, 1}});
  CHECK(r1.identity);
  CHECK(r1.ideal == stanley_reisner(l, {1, 1, 1, 1}));

  // K = ∂Δ^[2], L_k = ∂Δ^[2], r = 1: the 4-gon ideal on [4]
  SimplicialComplex s0 = SimplicialComplex::boundary_of_simplex(2, full_mask(2));
  CompositionIdealResult r2 = composition_ideal(s0, {s0, s0}, {Expvec{1, 1}, Expvec{1, 1}});
  CHECK(r2.identity);
  CHECK(r2.ideal.gens == std::vector<Expvec>({{0, 0, 1, 1}, {1, 1, 0, 0}}));

  // Tor of the composition matches the double-sum formula
  Rng rng(29);
  for (int t = 0; t < 15; ++t) {
    int m = 1 + static_cast<int>(rng.below(2));
    SimplicialComplex k = random_proper_complex(rng, m);
    std::vector<SimplicialComplex> ls;
    std::vector<Expvec> rs;
    for (int i = 0; i < m; ++i) {
      int n = 1 + static_cast<int>(rng.below(3));
      ls.push_back(random_proper_complex(rng, n));
      Expvec r(static_cast<size_t>(n));
      for (auto& e : r) e = 1 + static_cast<int>(rng.below(2));
      rs.push_back(std::move(r));
    }
    CompositionIdealResult res = composition_ideal(k, ls, rs);
    CHECK(res.identity);
    CHECK(taylor_tor(res.ideal, TorModule::ideal, Coefficients::Q()).totals().ranks ==
          composition_tor_double_sum(k, ls, rs, Coefficients::Q()).ranks);
  }
}
