#include "polyprod/total_complex.hpp"

#include <cstdlib>
#include <thread>

#include "polyprod/complex_io.hpp"

namespace polyprod {

std::vector<IndexPair> universe_pairs(Universe u, int m) {
  std::vector<IndexPair> out;
  for (const IndexPair& p : all_index_pairs(m))
    if (universe_contains(u, p)) out.push_back(p);
  return out;
}

bool universe_contains(Universe u, const IndexPair& p) {
  switch (u) {
    case Universe::Xm: return true;
    case Universe::Rm: return p.sigma == 0;
    case Universe::Lm: return p.omega != 0;
  }
  return false;
}

ChainComplex total_block(const SimplicialComplex& k, const IndexPair& p, Coefficients coeffs) {
  ChainComplex c;
  c.coeffs = coeffs;
  if (k.is_void() || !k.contains(p.sigma)) return c;

  // generators per degree: N̄ ⊆ ω with σ ∪ N̄ ∈ K, degree |N̄|
  int hi = 0;
  std::vector<std::vector<Mask>> labels(static_cast<size_t>(popcount(p.omega)) + 1);
  for_each_subset(p.omega, [&](Mask nbar) {
    if (k.contains(p.sigma | nbar)) {
      labels[static_cast<size_t>(popcount(nbar))].push_back(nbar);
      hi = std::max(hi, popcount(nbar));
    }
  });
  labels.resize(static_cast<size_t>(hi) + 1);
  for (auto& l : labels) std::sort(l.begin(), l.end());

  c.lo = 0;
  c.labels = labels;
  std::vector<std::map<Mask, Index>> index(labels.size());
  for (size_t d = 0; d < labels.size(); ++d) {
    c.dims.push_back(static_cast<Index>(labels[d].size()));
    for (size_t i = 0; i < labels[d].size(); ++i) index[d][labels[d][i]] = static_cast<Index>(i);
  }
  c.boundary.resize(c.dims.size());
  for (size_t d = 0; d < c.dims.size(); ++d) {
    Index rows = (d == 0) ? 0 : c.dims[d - 1];
    MatrixZ b = MatrixZ::Zero(rows, c.dims[d]);
    if (d > 0) {
      for (Index col = 0; col < b.cols(); ++col) {
        Mask nbar = labels[d][static_cast<size_t>(col)];
        for (int v : vertices_of(nbar)) {
          Mask rest = nbar & ~bit(v);
          auto it = index[d - 1].find(rest);
          if (it == index[d - 1].end()) continue;  // σ∪rest ∉ K cannot happen (downward closed)
          b(it->second, col) += ZZ(parity_sign(rank_in(nbar, v)));
        }
      }
    }
    c.boundary[d] = std::move(b);
  }
  c.validate();
  return c;
}

ChainComplex suspended_local_chain(const SimplicialComplex& k, const IndexPair& p,
                                   Coefficients coeffs) {
  return simplicial_chain(local_complex(k, p), ChainVariant::suspended_reduced, coeffs);
}

std::vector<std::vector<TotalGenerator>> local_iso_to_suspension(const SimplicialComplex& k,
                                                                 const IndexPair& p) {
  ChainComplex direct = total_block(k, p);
  ChainComplex susp = suspended_local_chain(k, p);
  const int m = k.ground_size();

  auto fail = [&](const std::string& what) {
    throw InvariantViolation("local_iso_to_suspension: " + what + " for sigma=" +
                             mask_to_string(p.sigma) + " omega=" + mask_to_string(p.omega) +
                             " on\n" + complex_to_text(k));
  };
  if (direct.degrees() != susp.degrees() || direct.lo != susp.lo) fail("degree ranges differ");
  for (int i = 0; i < direct.degrees(); ++i) {
    size_t si = static_cast<size_t>(i);
    if (direct.labels[si] != susp.labels[si]) fail("basis labels differ");
    if (direct.boundary[si] != susp.boundary[si]) fail("ε is not a chain map");
  }

  std::vector<std::vector<TotalGenerator>> out(static_cast<size_t>(direct.degrees()));
  for (size_t d = 0; d < out.size(); ++d)
    for (Mask nbar : direct.labels[d]) {
      TotalGenerator t;
      t.e = p.sigma;
      t.nbar = nbar;
      t.n = p.omega & ~nbar;
      t.i = full_mask(m) & ~(p.sigma | p.omega);
      out[d].push_back(t);
    }
  return out;
}

HomologySummary block_homology(const SimplicialComplex& k, const IndexPair& p, Coefficients c) {
  return homology(suspended_local_chain(k, p, c));
}

HomologySummary block_cohomology(const SimplicialComplex& k, const IndexPair& p, Coefficients c) {
  return cohomology(suspended_local_chain(k, p, c));
}

void parallel_for(Index n, const std::function<void(Index)>& fn) {
  int threads = 1;
  if (const char* env = std::getenv("POLYPROD_THREADS")) threads = std::max(1, std::atoi(env));
  threads = std::min<int>(threads, static_cast<int>(n));
  if (threads <= 1) {
    for (Index i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (Index i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errors[static_cast<size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

IndexedHomology total_homology(const SimplicialComplex& k, const std::vector<IndexPair>& blocks,
                               Coefficients coeffs) {
  IndexedHomology out;
  out.coeffs = coeffs;
  const bool crosscheck = k.ground_size() <= 3;
  std::vector<HomologySummary> results(blocks.size());
  parallel_for(static_cast<Index>(blocks.size()), [&](Index i) {
    const IndexPair& p = blocks[static_cast<size_t>(i)];
    if (crosscheck) local_iso_to_suspension(k, p);  // asserts the ε chain map
    results[static_cast<size_t>(i)] = block_homology(k, p, coeffs);
  });
  for (size_t i = 0; i < blocks.size(); ++i) out.set(blocks[i], std::move(results[i]));
  return out;
}

IndexedHomology total_homology(const SimplicialComplex& k, Universe u, Coefficients coeffs) {
  return total_homology(k, universe_pairs(u, k.ground_size()), coeffs);
}

}  // namespace polyprod
