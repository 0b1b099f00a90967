#include "polyprod/monomial_ideal.hpp"

#include <algorithm>

namespace polyprod {

namespace {

bool divides_vec(const Expvec& a, const Expvec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expvec lcm_vec(const Expvec& a, const Expvec& b) {
  Expvec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Expvec> gens) {
  MonomialIdeal out;
  out.nvars = nvars;
  for (const Expvec& g : gens) {
    if (static_cast<int>(g.size()) != nvars)
      throw InputError("monomial ideal: exponent vector length mismatch");
    for (int e : g)
      if (e < 0) throw InputError("monomial ideal: negative exponent");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < gens.size() && keep; ++j)
      if (i != j && divides_vec(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) keep = false;
    if (keep) out.gens.push_back(gens[i]);
  }
  return out;
}

MonomialIdeal stanley_reisner(const SimplicialComplex& k, const Expvec& r) {
  const int m = k.ground_size();
  if (static_cast<int>(r.size()) != m)
    throw InputError("stanley_reisner: exponent vector must have length m");
  for (int e : r)
    if (e < 1) throw InputError("stanley_reisner: exponents must be positive");
  if (k.is_void() || k == SimplicialComplex::full_simplex(m))
    throw InputError("stanley_reisner: K must differ from { } and the full simplex");
  std::vector<Expvec> gens;
  for (Mask nf : k.minimal_nonfaces()) {
    Expvec g(static_cast<size_t>(m), 0);
    for (int v : vertices_of(nf)) g[static_cast<size_t>(v - 1)] = r[static_cast<size_t>(v - 1)];
    gens.push_back(std::move(g));
  }
  return MonomialIdeal::from_generators(m, std::move(gens));
}

namespace {

template <typename F>
BettiTable taylor_tor_impl(const MonomialIdeal& ideal, TorModule module,
                           const typename FieldOps<F>::Ctx& ctx) {
  const int r = static_cast<int>(ideal.gens.size());
  if (r > 20) throw InputError("taylor_tor: generator count capped at 20");
  BettiTable out;
  if (r == 0) {
    if (module == TorModule::quotient) out.add(0, Expvec(static_cast<size_t>(ideal.nvars), 0), 1);
    return out;
  }

  // Taylor basis e_S grouped by multidegree lcm(S); the residue-field
  // differential keeps only unit entries, which stay inside a group.
  std::map<Expvec, std::vector<Mask>> groups;
  std::vector<Expvec> lcm_of(size_t{1} << r);
  lcm_of[0] = Expvec(static_cast<size_t>(ideal.nvars), 0);
  for (Mask s = 1; s < (Mask{1} << r); ++s) {
    int low = std::countr_zero(s);
    lcm_of[s] = lcm_vec(lcm_of[s & (s - 1)], ideal.gens[static_cast<size_t>(low)]);
  }
  for (Mask s = 0; s < (Mask{1} << r); ++s) groups[lcm_of[s]].push_back(s);

  for (auto& [alpha, members] : groups) {
    std::sort(members.begin(), members.end());
    std::map<Mask, Index> pos;
    std::vector<Index> count_by_size(static_cast<size_t>(r) + 1, 0);
    std::vector<std::vector<Mask>> by_size(static_cast<size_t>(r) + 1);
    for (Mask s : members) by_size[static_cast<size_t>(popcount(s))].push_back(s);
    for (auto& v : by_size) {
      std::sort(v.begin(), v.end());
      for (size_t i = 0; i < v.size(); ++i) pos[v[i]] = static_cast<Index>(i);
    }
    // boundary within the group: d e_S = Σ ± e_{S∖i} where lcm is preserved
    auto boundary = [&](int s) {
      Index rows = (s == 0) ? 0 : static_cast<Index>(by_size[static_cast<size_t>(s - 1)].size());
      Matrix<F> b = Matrix<F>::Zero(rows, static_cast<Index>(by_size[static_cast<size_t>(s)].size()));
      if (s == 0) return b;
      for (Index c = 0; c < b.cols(); ++c) {
        Mask set = by_size[static_cast<size_t>(s)][static_cast<size_t>(c)];
        int idx = 0;
        Mask ss = set;
        while (ss) {
          int bitpos = std::countr_zero(ss);
          ss &= ss - 1;
          Mask rest = set & ~(Mask{1} << bitpos);
          if (lcm_of[rest] == lcm_of[set]) {
            auto it = pos.find(rest);
            if (it != pos.end())
              b(it->second, c) = FieldOps<F>::from_int(parity_sign(idx), ctx);
          }
          ++idx;
        }
      }
      return b;
    };
    for (int s = 0; s <= r; ++s) {
      Index n = static_cast<Index>(by_size[static_cast<size_t>(s)].size());
      if (n == 0) continue;
      Index r_out = (s == 0) ? 0 : rank_f(boundary(s));
      Index r_in = (s == r) ? 0 : rank_f(boundary(s + 1));
      long betti = static_cast<long>(n - r_out - r_in);
      if (betti == 0) continue;
      if (module == TorModule::quotient)
        out.add(s, alpha, betti);
      else if (s >= 1)
        out.add(s - 1, alpha, betti);
    }
  }
  return out;
}

}  // namespace

BettiTable taylor_tor(const MonomialIdeal& ideal, TorModule module, Coefficients field) {
  switch (field.kind) {
    case Coefficients::rationals:
      return taylor_tor_impl<QQ>(ideal, module, QCtx{});
    case Coefficients::prime_field:
      return taylor_tor_impl<Fp>(ideal, module, FpCtx{field.p});
    default:
      throw InputError("taylor_tor: field coefficients required");
  }
}

HochsterResult hochster_check(const SimplicialComplex& k, const Expvec& r, Coefficients field) {
  HochsterResult res;
  res.taylor = taylor_tor(stanley_reisner(k, r), TorModule::ideal, field);

  const int m = k.ground_size();
  for_each_subset(full_mask(m), [&](Mask omega) {
    if (k.contains(omega)) return;
    HomologySummary h = reduced_cohomology(restriction(k, omega), field);
    if (h.is_zero()) return;
    Expvec deg(static_cast<size_t>(m), 0);
    for (int v : vertices_of(omega)) deg[static_cast<size_t>(v - 1)] = r[static_cast<size_t>(v - 1)];
    for (const auto& [c, g] : h.groups) {
      int i = popcount(omega) - c - 2;
      POLYPROD_CHECK(i >= 0, "hochster_check: negative homological degree");
      res.hochster.add(i, deg, g.free_rank);
    }
  });
  res.match = (res.taylor == res.hochster);
  return res;
}

CompositionIdealResult composition_ideal(const SimplicialComplex& k,
                                         const std::vector<SimplicialComplex>& ls,
                                         const std::vector<Expvec>& rs) {
  const int m = k.ground_size();
  if (static_cast<int>(ls.size()) != m || rs.size() != ls.size())
    throw InputError("composition_ideal: need one (L_k, r_k) per vertex of K");
  if (k.is_void() || k == SimplicialComplex::full_simplex(m))
    throw InputError("composition_ideal: K must differ from { } and the full simplex");

  std::vector<MonomialIdeal> ideals;
  std::vector<int> offsets{0};
  for (size_t i = 0; i < ls.size(); ++i) {
    ideals.push_back(stanley_reisner(ls[i], rs[i]));
    offsets.push_back(offsets.back() + ls[i].ground_size());
  }
  const int n = offsets.back();

  // Z^⊗(K; I_1, ..., I_m): products over maximal faces (smaller faces are
  // subsumed), one generator from each missing factor
  std::vector<Expvec> gens;
  for (Mask tau : k.facets()) {
    std::vector<int> missing;
    for (int i = 0; i < m; ++i)
      if (!(tau & bit(i + 1))) missing.push_back(i);
    std::vector<Expvec> partial{Expvec(static_cast<size_t>(n), 0)};
    for (int i : missing) {
      std::vector<Expvec> next;
      for (const Expvec& base : partial)
        for (const Expvec& g : ideals[static_cast<size_t>(i)].gens) {
          Expvec e = base;
          for (int j = 0; j < static_cast<int>(g.size()); ++j)
            e[static_cast<size_t>(offsets[static_cast<size_t>(i)] + j)] = g[static_cast<size_t>(j)];
          next.push_back(std::move(e));
        }
      partial = std::move(next);
    }
    for (Expvec& e : partial) gens.push_back(std::move(e));
  }

  CompositionIdealResult res;
  res.ideal = MonomialIdeal::from_generators(n, std::move(gens));

  Expvec concat;
  for (const Expvec& rk : rs) concat.insert(concat.end(), rk.begin(), rk.end());
  SimplicialComplex zdual =
      composition_complex(alexander_dual(k, full_mask(m)), ls);
  res.via_dual = stanley_reisner(zdual, concat);
  res.identity = (res.ideal == res.via_dual);
  return res;
}

GradedRanks composition_tor_double_sum(const SimplicialComplex& k,
                                       const std::vector<SimplicialComplex>& ls,
                                       const std::vector<Expvec>& rs, Coefficients field) {
  const int m = k.ground_size();
  std::vector<GradedRanks> tor_dims;
  for (size_t i = 0; i < ls.size(); ++i)
    tor_dims.push_back(taylor_tor(stanley_reisner(ls[i], rs[i]), TorModule::ideal, field).totals());

  GradedRanks out;
  if (k.is_void()) return out;
  for (Mask sigma : k.faces()) {
    HomologySummary hk =
        block_homology(k, IndexPair(sigma, full_mask(m) & ~sigma), field);
    GradedRanks g;
    for (const auto& [d, grp] : hk.groups) g.add(d, grp.free_rank);
    if (g.is_zero()) continue;
    for (int i = 0; i < m; ++i)
      if (!(sigma & bit(i + 1))) {
        g = convolve(g, tor_dims[static_cast<size_t>(i)]);
        if (g.is_zero()) break;
      }
    for (const auto& [d, rr] : g.ranks) out.add(d, rr);
  }
  return out;
}

}  // namespace polyprod
