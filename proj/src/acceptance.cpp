#include "polyprod/acceptance.hpp"

#include <chrono>
#include <sstream>

#include "polyprod/aw_cup.hpp"
#include "polyprod/complex_io.hpp"
#include "polyprod/duality.hpp"
#include "polyprod/monomial_ideal.hpp"
#include "polyprod/random_complex.hpp"
#include "polyprod/ring.hpp"

namespace polyprod {

std::vector<SimplicialComplex> all_complexes(int m) {
  if (m > 4) throw InputError("all_complexes capped at m <= 4");
  std::vector<Mask> nonempty;
  for (Mask s = 1; s <= full_mask(m); ++s) nonempty.push_back(s);
  std::vector<SimplicialComplex> out;
  out.push_back(SimplicialComplex::void_complex(m));
  const size_t n = nonempty.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
    std::vector<Mask> faces;
    bool closed = true;
    for (size_t i = 0; i < n && closed; ++i) {
      if (!(pick & (std::uint64_t{1} << i))) continue;
      Mask f = nonempty[i];
      faces.push_back(f);
      // downward closure check against the picked set
      Mask ff = f;
      while (ff && closed) {
        int b = std::countr_zero(ff);
        ff &= ff - 1;
        Mask sub = f & ~(Mask{1} << b);
        if (sub == 0) continue;
        size_t pos = static_cast<size_t>(sub - 1);
        if (!(pick & (std::uint64_t{1} << pos))) closed = false;
      }
    }
    if (!closed) continue;
    out.push_back(SimplicialComplex::from_faces(m, std::move(faces)));
  }
  return out;
}

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  long count = 0;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      detail << what;
    }
  }
};

PairSequence disk1_pairs(int m) {
  return PairSequence::uniform(m, SimplicialComplex::full_simplex(2),
                               SimplicialComplex::boundary_of_simplex(2, full_mask(2)));
}

std::string hs(const HomologySummary& h) { return h.str(); }

// --- criterion 1 -----------------------------------------------------------
Check criterion1(std::uint64_t seed, int count) {
  Check c;
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    int m = 3 + (t % 2);
    SimplicialComplex k = random_complex(rng, m);
    PairSequence pairs = disk1_pairs(m);
    HomologySummary direct =
        homology(simplicial_chain(polyhedral_product_complex(k, pairs), ChainVariant::plain,
                                  Coefficients::Z()));
    HomologySummary closed = disk_pair_closed_form(k, 1, Coefficients::Z()).total;
    HomologySummary dec = decompose(k, pairs, Flavor::product, Coefficients::Z()).total;
    c.expect(direct == closed && direct == dec,
             "instance " + std::to_string(t) + " on\n" + complex_to_text(k) + "direct " +
                 hs(direct) + " vs closed " + hs(closed) + " vs decompose " + hs(dec));
    if (!c.ok) break;
  }
  return c;
}

// --- criterion 2 -----------------------------------------------------------
Check criterion2(std::uint64_t seed, int count) {
  Check c;
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    int m = 1 + static_cast<int>(rng.below(2));
    SimplicialComplex k = random_complex(rng, m);
    std::vector<PairSequence::Pair> prs;
    for (int i = 0; i < m; ++i) {
      int n = 1 + static_cast<int>(rng.below(3));
      SimplicialComplex x = rng.chance(1, 2) ? SimplicialComplex::full_simplex(n)
                                             : random_complex(rng, n);
      SimplicialComplex a =
          rng.chance(1, 10) ? SimplicialComplex::void_complex(n) : random_subcomplex(rng, x);
      prs.push_back({x, a});
    }
    PairSequence pairs(prs);
    HomologySummary direct =
        homology(simplicial_chain(polyhedral_join(k, pairs), ChainVariant::reduced,
                                  Coefficients::Z()));
    HomologySummary dec = decompose(k, pairs, Flavor::join, Coefficients::Z()).total;
    c.expect(direct == dec, "instance " + std::to_string(t) + " on\n" + complex_to_text(k) +
                                "direct " + hs(direct) + " vs decompose " + hs(dec));
    if (!c.ok) break;
  }
  return c;
}

// --- criterion 3 -----------------------------------------------------------
Check criterion3(std::uint64_t seed, int count) {
  Check c;
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    int m = 2 + static_cast<int>(rng.below(4));
    SimplicialComplex k = random_proper_complex(rng, m);
    Expvec r(static_cast<size_t>(m), 1);
    if (t % 2)
      for (int i = 0; i < m; ++i) r[static_cast<size_t>(i)] = 1 + static_cast<int>(rng.below(3));
    HochsterResult rq = hochster_check(k, r, Coefficients::Q());
    HochsterResult r2 = hochster_check(k, r, Coefficients::F(2));
    c.expect(rq.match && r2.match,
             "instance " + std::to_string(t) + " on\n" + complex_to_text(k));
    if (!c.ok) break;
  }
  return c;
}

// --- criterion 4 -----------------------------------------------------------
Check criterion4(std::uint64_t seed, int count) {
  Check c;
  Rng rng(seed);
  for (int t = 0; t < count && c.ok; ++t) {
    int m = 1 + static_cast<int>(rng.below(5));
    SimplicialComplex k = random_complex(rng, m);
    for (const IndexPair& p : all_index_pairs(m)) {
      if (p.omega == 0) continue;
      c.expect(dual_local_identity(k, p),
               "local identity fails at sigma=" + mask_to_string(p.sigma) + " omega=" +
                   mask_to_string(p.omega) + " on\n" + complex_to_text(k));
      DualityCertificate cert = gamma_certificate(k, p, Coefficients::Z());
      c.expect(cert.matched, "duality mismatch at sigma=" + mask_to_string(p.sigma) +
                                 " omega=" + mask_to_string(p.omega) + " on\n" +
                                 complex_to_text(k) + "left " + hs(cert.left) + " right " +
                                 hs(cert.right));
      if (!c.ok) break;
    }
  }
  return c;
}

// --- criterion 5 -----------------------------------------------------------
Check criterion5(std::uint64_t seed, int count) {
  Check c;
  Rng rng(seed);
  for (int t = 0; t < count && c.ok; ++t) {
    int m = 1 + static_cast<int>(rng.below(3));
    SimplicialComplex k =
        (t % 10 == 9) ? SimplicialComplex::void_complex(m) : random_complex(rng, m);

    // Thm 5.6 on composition complexes
    std::vector<SimplicialComplex> ls;
    for (int i = 0; i < m; ++i) {
      int n = 1 + static_cast<int>(rng.below(3));
      SimplicialComplex l = random_complex(rng, n);
      while (l == SimplicialComplex::full_simplex(n)) l = random_complex(rng, n);
      ls.push_back(l);
    }
    c.expect(composition_dual_identity(k, ls),
             "composition dual identity fails on\n" + complex_to_text(k));

    // Thm 4.9 composition law
    std::vector<PairSequence::Pair> mid;
    std::vector<PairSequence::Pair> inner_flat;
    std::vector<PairSequence::Pair> outer;
    bool sizes_ok = true;
    for (int i = 0; i < m && sizes_ok; ++i) {
      int n = 1 + static_cast<int>(rng.below(3));
      SimplicialComplex x = random_complex(rng, n);
      SimplicialComplex a = random_subcomplex(rng, x);
      std::vector<PairSequence::Pair> inner;
      for (int j = 0; j < n; ++j) {
        int g = 1 + static_cast<int>(rng.below(2));
        SimplicialComplex u = random_complex(rng, g);
        SimplicialComplex cc = random_subcomplex(rng, u);
        inner.push_back({u, cc});
        inner_flat.push_back({u, cc});
      }
      PairSequence inner_seq(inner);
      mid.push_back({x, a});
      outer.push_back({polyhedral_join(x, inner_seq), polyhedral_join(a, inner_seq)});
    }
    SimplicialComplex lhs = polyhedral_join(k, PairSequence(outer));
    SimplicialComplex rhs =
        polyhedral_join(polyhedral_join(k, PairSequence(mid)), PairSequence(inner_flat));
    c.expect(lhs == rhs, "composition law fails on\n" + complex_to_text(k));
  }
  return c;
}

// --- criterion 6 -----------------------------------------------------------
std::vector<Mask> cycle_components(int m, Mask omega) {
  std::vector<Mask> comps;
  Mask seen = 0;
  for (int v : vertices_of(omega)) {
    if (seen & bit(v)) continue;
    Mask comp = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (comp & bit(u)) continue;
      comp |= bit(u);
      int prev = (u == 1) ? m : u - 1;
      int next = (u == m) ? 1 : u + 1;
      if ((omega & bit(prev)) && !(comp & bit(prev))) stack.push_back(prev);
      if ((omega & bit(next)) && !(comp & bit(next))) stack.push_back(next);
    }
    comps.push_back(comp);
    seen |= comp;
  }
  std::sort(comps.begin(), comps.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return comps;
}

int mgon_star(int m, int a, int b) {
  if (b == (a % m) + 1) return 1;
  if (a == (b % m) + 1) return -1;
  return 0;
}

Check criterion6(std::uint64_t, int) {
  Check c;
  for (int m = 4; m <= 8 && c.ok; ++m) {
    SimplicialComplex k = SimplicialComplex::polygon(m);
    RingTable<QQ> table =
        total_cohomology_ring<QQ>(k, {Family::universal, true}, Universe::Rm, QCtx{});

    auto h_class = [&](Mask omega, Mask comp) {
      // cochain Σ_{u∈comp} {u}* in block (∅,ω), degree 1
      for (size_t bi = 0; bi < table.blocks.size(); ++bi) {
        if (!(table.blocks[bi].p == IndexPair(0, omega))) continue;
        const auto& labels = table.blocks[bi].labels_at(1);
        Vector<QQ> v = Vector<QQ>::Zero(static_cast<Index>(labels.size()));
        for (size_t i = 0; i < labels.size(); ++i)
          if (subset_of(labels[i], comp) && popcount(labels[i]) == 1) v(static_cast<Index>(i)) = QQ(1);
        return ring_class(table, IndexPair(0, omega), 1, v);
      }
      return std::map<Index, QQ>{};
    };
    auto kappa_class = [&]() {
      for (size_t bi = 0; bi < table.blocks.size(); ++bi) {
        if (!(table.blocks[bi].p == IndexPair(0, full_mask(m)))) continue;
        const auto& labels = table.blocks[bi].labels_at(2);
        Vector<QQ> v = Vector<QQ>::Zero(static_cast<Index>(labels.size()));
        for (size_t i = 0; i < labels.size(); ++i)
          if (labels[i] == (bit(1) | bit(2))) v(static_cast<Index>(i)) = QQ(1);
        return ring_class(table, IndexPair(0, full_mask(m)), 2, v);
      }
      return std::map<Index, QQ>{};
    };
    std::map<Index, QQ> kappa = kappa_class();
    c.expect(kappa.size() == 1, "m-gon: kappa class not found");

    // enumerate ω with >= 2 components
    std::vector<Mask> omegas;
    for (Mask w = 1; w < full_mask(m); ++w)
      if (cycle_components(m, w).size() >= 2) omegas.push_back(w);

    for (Mask w1 : omegas) {
      std::vector<Mask> comps1 = cycle_components(m, w1);
      for (Mask w2 : omegas) {
        std::vector<Mask> comps2 = cycle_components(m, w2);
        for (Mask c1 : comps1)
          for (Mask c2 : comps2) {
            std::map<Index, QQ> prod = ring_multiply(table, h_class(w1, c1), h_class(w2, c2));
            long expected = 0;
            if ((w1 | w2) == full_mask(m)) {
              for (int u : vertices_of(c1))
                for (int v : vertices_of(c2 & ~w1)) expected += mgon_star(m, u, v);
              if ((w1 & w2) == 0) {
                long paper = 0;
                for (int u : vertices_of(c1))
                  for (int v : vertices_of(c2)) paper += mgon_star(m, u, v);
                c.expect(paper == expected, "m-gon: effective star differs from the paper sum");
              }
            }
            std::map<Index, QQ> want;
            if (expected != 0)
              for (const auto& [i, q] : kappa) want[i] = q * QQ(expected);
            c.expect(prod == want, "m-gon m=" + std::to_string(m) + ": h*h mismatch at omega1=" +
                                       mask_to_string(w1) + " omega2=" + mask_to_string(w2));
            if (!c.ok) return c;
          }
      }
    }
    // h ∪ κ = κ ∪ h = κ ∪ κ = 0
    for (Mask w1 : omegas) {
      std::vector<Mask> comps1 = cycle_components(m, w1);
      std::map<Index, QQ> h = h_class(w1, comps1.front());
      c.expect(ring_multiply(table, h, kappa).empty(), "m-gon: h*kappa nonzero");
      c.expect(ring_multiply(table, kappa, h).empty(), "m-gon: kappa*h nonzero");
    }
    c.expect(ring_multiply(table, kappa, kappa).empty(), "m-gon: kappa^2 nonzero");
  }
  return c;
}

// --- criterion 7 -----------------------------------------------------------
template <typename F>
bool ring_oracle_disk1(const SimplicialComplex& k, const typename FieldOps<F>::Ctx& ctx,
                       std::string& why) {
  AlgebraTable<F> ring =
      to_algebra(polyhedral_ring<F>(k, PairKind::Disk(1), ctx), true);
  SimplicialComplex model = polyhedral_product_complex(k, disk1_pairs(k.ground_size()));
  AlgebraTable<F> aw = aw_cup_product<F>(model, ctx);
  if (ring.dims_by_degree() != aw.dims_by_degree()) {
    why = "cohomology dimensions differ";
    return false;
  }
  if (bidegree_mult_ranks(ring) != bidegree_mult_ranks(aw)) {
    why = "multiplication ranks differ";
    return false;
  }
  return true;
}

Check criterion7(std::uint64_t, int) {
  Check c;
  for (int m = 1; m <= 3 && c.ok; ++m) {
    for (const SimplicialComplex& k : all_complexes(m)) {
      if (k.is_void()) continue;  // no staircase model over the void complex
      std::string why;
      bool okq = ring_oracle_disk1<QQ>(k, QCtx{}, why);
      c.expect(okq, "disk1 oracle over Q: " + why + " on\n" + complex_to_text(k));
      if (!c.ok) break;
      bool ok2 = ring_oracle_disk1<Fp>(k, FpCtx{2}, why);
      c.expect(ok2, "disk1 oracle over F2: " + why + " on\n" + complex_to_text(k));
      if (!c.ok) break;
    }
  }
  return c;
}

// --- criterion 8 -----------------------------------------------------------
Check criterion8(std::uint64_t, int) {
  Check c;
  const std::vector<ProductFamily> families = {
      {Family::universal, false},      {Family::normal, false},
      {Family::strictly_normal, false}, {Family::special, false},
      {Family::weakly_special, false}, {Family::universal, true},
      {Family::normal, true},          {Family::strictly_normal, true},
      {Family::special, true},         {Family::weakly_special, true}};

  // partiality: every family's local product equals the universal one or zero
  for (int m = 1; m <= 3 && c.ok; ++m) {
    std::vector<IndexPair> all = all_index_pairs(m);
    for (const SimplicialComplex& k : all_complexes(m)) {
      if (k.is_void()) continue;
      for (const IndexPair& dst : all) {
        for (const IndexPair& s1 : all) {
          for (const IndexPair& s2 : all) {
            MatrixZ uni = local_product(k, s1, s2, dst, {Family::universal, false});
            for (const ProductFamily& f : families) {
              MatrixZ fam = local_product(k, s1, s2, dst, f);
              bool zero = true;
              for (Index i = 0; i < fam.rows() && zero; ++i)
                for (Index j = 0; j < fam.cols(); ++j)
                  if (!fam(i, j).is_zero()) {
                    zero = false;
                    break;
                  }
              c.expect(zero || fam == uni, "partiality fails on\n" + complex_to_text(k));
              if (!c.ok) return c;
            }
          }
        }
      }
    }
  }

  // algebra laws for the strictly normal and special tables, m <= 4
  for (int m = 1; m <= 4 && c.ok; ++m) {
    for (const SimplicialComplex& k : all_complexes(m)) {
      if (k.is_void()) continue;
      for (Family fam : {Family::strictly_normal, Family::special}) {
        RingTable<QQ> t =
            total_cohomology_ring<QQ>(k, {fam, false}, Universe::Xm, QCtx{});
        const Index n = static_cast<Index>(t.basis.size());
        // unit
        Index unit = t.find(IndexPair(0, 0), 0, 0);
        c.expect(unit >= 0, "laws: unit class missing on\n" + complex_to_text(k));
        if (!c.ok) return c;
        for (Index i = 0; i < n; ++i) {
          auto left = t.product(unit, i);
          auto right = t.product(i, unit);
          bool lok = left.size() == 1 && left[0].first == i && left[0].second == QQ(1);
          bool rok = right.size() == 1 && right[0].first == i && right[0].second == QQ(1);
          c.expect(lok && rok, "laws: unit fails on\n" + complex_to_text(k));
          if (!c.ok) return c;
        }
        // graded commutativity
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j) {
            auto ab = t.product(i, j);
            auto ba = t.product(j, i);
            int s = t.basis[static_cast<size_t>(i)].degree * t.basis[static_cast<size_t>(j)].degree;
            if (s % 2)
              for (auto& [idx, q] : ba) q = -q;
            c.expect(ab == ba, "laws: graded commutativity fails on\n" + complex_to_text(k));
            if (!c.ok) return c;
          }
        // associativity
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j)
            for (Index l = 0; l < n; ++l) {
              std::map<Index, QQ> lhs, rhs;
              for (const auto& [x, cx] : t.product(i, j))
                for (const auto& [y, cy] : t.product(x, l)) {
                  lhs[y] += cx * cy;
                  if (lhs[y].is_zero()) lhs.erase(y);
                }
              for (const auto& [x, cx] : t.product(j, l))
                for (const auto& [y, cy] : t.product(i, x)) {
                  rhs[y] += cx * cy;
                  if (rhs[y].is_zero()) rhs.erase(y);
                }
              c.expect(lhs == rhs, "laws: associativity fails on\n" + complex_to_text(k));
              if (!c.ok) return c;
            }
      }
    }
  }
  return c;
}

// --- criterion 9 -----------------------------------------------------------
IndexedHomology expected_total(const SimplicialComplex& k) {
  // Example-style closed forms for { }, {∅}, Δ^S and ∂Δ^S on [m]
  const int m = k.ground_size();
  IndexedHomology out;
  out.coeffs = Coefficients::Z();
  auto unit = [] {
    HomologySummary h;
    h.groups[0] = DegreeSummary{1, {}};
    return h;
  };
  if (k.is_void()) return out;
  // detect Δ^S or ∂Δ^S
  for (const IndexPair& p : all_index_pairs(m)) {
    (void)p;
    break;
  }
  SimplicialComplex full = SimplicialComplex::full_simplex(m);
  for (Mask s = 0; s <= full_mask(m); ++s) {
    if (k == SimplicialComplex::simplex(m, s)) {
      for (const IndexPair& p : all_index_pairs(m))
        if (subset_of(p.sigma, s) && (p.omega & s) == 0) out.set(p, unit());
      return out;
    }
    if (s != 0 && k == SimplicialComplex::boundary_of_simplex(m, s)) {
      for (const IndexPair& p : all_index_pairs(m)) {
        if (!subset_of(p.sigma, s) || p.sigma == s) continue;
        if ((p.omega & s) == 0) {
          out.set(p, unit());
        } else if (subset_of(s & ~p.sigma, p.omega)) {
          HomologySummary h;
          h.groups[popcount(s) - popcount(p.sigma) - 1] = DegreeSummary{1, {}};
          out.set(p, h);
        }
      }
      return out;
    }
    if (s == full_mask(m)) break;
  }
  throw InputError("expected_total: not a listed closed-form complex");
}

Check criterion9(std::uint64_t, int) {
  Check c;
  const int m = 4;
  std::vector<SimplicialComplex> cases{SimplicialComplex::void_complex(m)};
  for (Mask s = 0; s <= full_mask(m); ++s) {
    cases.push_back(SimplicialComplex::simplex(m, s));
    if (s != 0) cases.push_back(SimplicialComplex::boundary_of_simplex(m, s));
    if (s == full_mask(m)) break;
  }
  for (const SimplicialComplex& k : cases) {
    IndexedHomology got = total_homology(k, Universe::Xm, Coefficients::Z());
    IndexedHomology want = expected_total(k);
    c.expect(got == want, "closed-form table mismatch on\n" + complex_to_text(k));
    if (!c.ok) return c;
  }

  // 4-gon, n = 2: Betti 1,0,0,2,0,0,1
  SimplicialComplex gon = SimplicialComplex::polygon(4);
  HomologySummary closed = disk_pair_closed_form(gon, 2, Coefficients::Z()).total;
  HomologySummary expected;
  expected.coeffs = Coefficients::Z();
  expected.groups[0] = DegreeSummary{1, {}};
  expected.groups[3] = DegreeSummary{2, {}};
  expected.groups[6] = DegreeSummary{1, {}};
  c.expect(closed == expected, "4-gon disk(2) closed form: " + hs(closed));
  PairSequence disk2 = PairSequence::uniform(
      4, SimplicialComplex::full_simplex(3),
      SimplicialComplex::boundary_of_simplex(3, full_mask(3)));
  HomologySummary dec = decompose(gon, disk2, Flavor::product, Coefficients::Z()).total;
  c.expect(dec == expected, "4-gon disk(2) decomposition: " + hs(dec));
  return c;
}

// --- criterion 10 ----------------------------------------------------------
Check criterion10(std::uint64_t seed, int count) {
  Check c;
  Rng rng(seed);
  for (int t = 0; t < count && c.ok; ++t) {
    int m = 1 + static_cast<int>(rng.below(3));
    SimplicialComplex k = random_proper_complex(rng, m);
    while (k.is_void()) k = random_proper_complex(rng, m);
    std::vector<SimplicialComplex> ls;
    std::vector<Expvec> rs;
    for (int i = 0; i < m; ++i) {
      int n = 1 + static_cast<int>(rng.below(3));
      SimplicialComplex l = random_proper_complex(rng, n);
      ls.push_back(l);
      Expvec r(static_cast<size_t>(n));
      for (auto& e : r) e = 1 + static_cast<int>(rng.below(3));
      rs.push_back(std::move(r));
    }
    CompositionIdealResult res = composition_ideal(k, ls, rs);
    c.expect(res.identity, "ideal identity fails on\n" + complex_to_text(k));
    if (!c.ok) break;
    for (Coefficients f : {Coefficients::Q(), Coefficients::F(2)}) {
      GradedRanks left = taylor_tor(res.ideal, TorModule::ideal, f).totals();
      GradedRanks right = composition_tor_double_sum(k, ls, rs, f);
      c.expect(left.ranks == right.ranks,
               "Tor double-sum mismatch over " + f.str() + " on\n" + complex_to_text(k));
      if (!c.ok) break;
    }
  }
  return c;
}

struct Spec {
  const char* name;
  double budget;
  std::uint64_t seed;
  int count;
  Check (*fn)(std::uint64_t, int);
};

const Spec kSpecs[] = {
    {"decomposition-oracle", 120.0, 1001, 200, criterion1},
    {"join-oracle", 120.0, 1002, 100, criterion2},
    {"hochster", 300.0, 1003, 200, criterion3},
    {"duality", 180.0, 1004, 200, criterion4},
    {"composition-identities", 60.0, 1005, 100, criterion5},
    {"mgon-ring", 60.0, 1006, 0, criterion6},
    {"ring-oracle", 180.0, 1007, 0, criterion7},
    {"partiality-and-laws", 60.0, 1008, 0, criterion8},
    {"closed-forms", 60.0, 1009, 0, criterion9},
    {"ideal-identity", 120.0, 1010, 50, criterion10},
};

}  // namespace

CriterionResult run_criterion(int number, std::uint64_t seed, int count) {
  if (number < 1 || number > 10) throw InputError("criterion number must be 1..10");
  const Spec& s = kSpecs[number - 1];
  CriterionResult res;
  res.number = number;
  res.name = s.name;
  res.budget = s.budget;
  auto start = std::chrono::steady_clock::now();
  Check c = s.fn(seed ? seed : s.seed, count ? count : s.count);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.pass = c.ok && res.seconds <= s.budget;
  res.detail = c.ok ? (std::to_string(c.count) + " checks") : c.detail.str();
  if (c.ok && res.seconds > s.budget) res.detail += " (over time budget)";
  return res;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& numbers, std::uint64_t seed,
                                            int count) {
  std::vector<int> which = numbers;
  if (which.empty())
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  std::vector<CriterionResult> out;
  for (int n : which) out.push_back(run_criterion(n, seed, count));
  return out;
}

int criterion_from_name(const std::string& name) {
  for (int i = 0; i < 10; ++i)
    if (name == kSpecs[i].name) return i + 1;
  throw InputError("unknown suite: " + name);
}

std::vector<std::string> criterion_names() {
  std::vector<std::string> out;
  for (const Spec& s : kSpecs) out.push_back(s.name);
  return out;
}

}  // namespace polyprod
