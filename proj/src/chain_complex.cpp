#include "polyprod/chain_complex.hpp"

#include <algorithm>
#include <sstream>

namespace polyprod {

void ChainComplex::validate() const {
  POLYPROD_CHECK(dims.size() == boundary.size(), "chain complex: shape arrays disagree");
  for (int i = 0; i < degrees(); ++i) {
    const MatrixZ& b = boundary[static_cast<size_t>(i)];
    POLYPROD_CHECK(b.cols() == dims[static_cast<size_t>(i)], "chain complex: boundary cols");
    Index prev = (i == 0) ? 0 : dims[static_cast<size_t>(i - 1)];
    POLYPROD_CHECK(b.rows() == prev, "chain complex: boundary rows");
    if (i >= 1 && boundary[static_cast<size_t>(i - 1)].rows() > 0 && b.cols() > 0) {
      MatrixZ dd = boundary[static_cast<size_t>(i - 1)] * b;
      for (Index r = 0; r < dd.rows(); ++r)
        for (Index c = 0; c < dd.cols(); ++c)
          POLYPROD_CHECK(dd(r, c).is_zero(), "chain complex: d∘d != 0");
    }
  }
}

ChainComplex simplicial_chain(const SimplicialComplex& k, ChainVariant variant,
                              Coefficients coeffs) {
  ChainComplex c;
  c.coeffs = coeffs;
  if (k.is_void()) return c;

  const int dim = k.dim();  // >= -1
  const bool reduced = variant != ChainVariant::plain;
  const bool suspended = variant == ChainVariant::suspended_reduced;

  // grade of a face f
  auto grade = [&](Mask f) { return suspended ? popcount(f) : popcount(f) - 1; };

  int lo = reduced ? grade(0) : 0;
  int hi = suspended ? dim + 1 : dim;
  if (!reduced && dim < 0) return c;  // plain chains of {∅} vanish

  c.lo = lo;
  std::vector<std::map<Mask, Index>> index(static_cast<size_t>(hi - lo + 1));
  c.labels.resize(static_cast<size_t>(hi - lo + 1));
  for (Mask f : k.faces()) {
    if (!reduced && f == 0) continue;
    int d = grade(f) - lo;
    Index pos = static_cast<Index>(c.labels[static_cast<size_t>(d)].size());
    c.labels[static_cast<size_t>(d)].push_back(f);  // faces() is mask-sorted
    index[static_cast<size_t>(d)][f] = pos;
  }
  for (const auto& l : c.labels) c.dims.push_back(static_cast<Index>(l.size()));

  c.boundary.resize(c.dims.size());
  for (int i = 0; i < c.degrees(); ++i) {
    Index rows = (i == 0) ? 0 : c.dims[static_cast<size_t>(i - 1)];
    MatrixZ b = MatrixZ::Zero(rows, c.dims[static_cast<size_t>(i)]);
    if (i > 0) {
      for (Index col = 0; col < b.cols(); ++col) {
        Mask f = c.labels[static_cast<size_t>(i)][static_cast<size_t>(col)];
        int j = 0;
        for (int v : vertices_of(f)) {
          Mask g = f & ~bit(v);
          auto it = index[static_cast<size_t>(i - 1)].find(g);
          if (it != index[static_cast<size_t>(i - 1)].end())
            b(it->second, col) += ZZ(parity_sign(j));
          ++j;
        }
      }
    }
    c.boundary[static_cast<size_t>(i)] = std::move(b);
  }
  c.validate();
  return c;
}

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.coeffs == b.coeffs)) throw InputError("tensor: coefficient mismatch");
  ChainComplex c;
  c.coeffs = a.coeffs;
  if (a.empty() || b.empty()) return c;
  c.lo = a.lo + b.lo;
  int hi = a.hi() + b.hi();

  // basis of degree t: pairs (p, q), p + q = t, ordered by (p, ia, ib)
  struct Entry {
    int p;
    Index ia, ib;
  };
  std::vector<std::vector<Entry>> basis(static_cast<size_t>(hi - c.lo + 1));
  std::vector<std::map<std::tuple<int, Index, Index>, Index>> index(basis.size());
  for (int p = a.lo; p <= a.hi(); ++p)
    for (int q = b.lo; q <= b.hi(); ++q) {
      for (Index ia = 0; ia < a.dim(p); ++ia)
        for (Index ib = 0; ib < b.dim(q); ++ib) {
          size_t t = static_cast<size_t>(p + q - c.lo);
          index[t][{p, ia, ib}] = static_cast<Index>(basis[t].size());
          basis[t].push_back({p, ia, ib});
        }
    }
  for (const auto& bs : basis) c.dims.push_back(static_cast<Index>(bs.size()));

  c.boundary.resize(c.dims.size());
  for (int i = 0; i < c.degrees(); ++i) {
    Index rows = (i == 0) ? 0 : c.dims[static_cast<size_t>(i - 1)];
    MatrixZ m = MatrixZ::Zero(rows, c.dims[static_cast<size_t>(i)]);
    if (i > 0) {
      int t = c.lo + i;
      for (Index col = 0; col < m.cols(); ++col) {
        const Entry& e = basis[static_cast<size_t>(i)][static_cast<size_t>(col)];
        int q = t - e.p;
        // da ⊗ b
        if (const MatrixZ* da = a.boundary_at(e.p); da && da->rows() > 0) {
          for (Index r = 0; r < da->rows(); ++r) {
            if ((*da)(r, e.ia).is_zero()) continue;
            auto it = index[static_cast<size_t>(i - 1)].find({e.p - 1, r, e.ib});
            POLYPROD_CHECK(it != index[static_cast<size_t>(i - 1)].end(), "tensor: index hole");
            m(it->second, col) += (*da)(r, e.ia);
          }
        }
        // (-1)^{|a|} a ⊗ db
        if (const MatrixZ* db = b.boundary_at(q); db && db->rows() > 0) {
          ZZ sgn(parity_sign(e.p));
          for (Index r = 0; r < db->rows(); ++r) {
            if ((*db)(r, e.ib).is_zero()) continue;
            auto it = index[static_cast<size_t>(i - 1)].find({e.p, e.ia, r});
            POLYPROD_CHECK(it != index[static_cast<size_t>(i - 1)].end(), "tensor: index hole");
            m(it->second, col) += sgn * (*db)(r, e.ib);
          }
        }
      }
    }
    c.boundary[static_cast<size_t>(i)] = std::move(m);
  }
  c.validate();
  return c;
}

std::string HomologySummary::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, g] : groups) {
    if (!first) os << ", ";
    os << "H_" << d << " = ";
    bool piece = false;
    if (g.free_rank > 0) {
      os << (coeffs.kind == Coefficients::integers ? "Z" : coeffs.str());
      if (g.free_rank > 1) os << "^" << g.free_rank;
      piece = true;
    }
    for (const ZZ& t : g.torsion) {
      if (piece) os << " + ";
      os << "Z/" << t.str();
      piece = true;
    }
    if (!piece) os << "0";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

template <typename F>
DegreeSummary field_homology_at(const ChainComplex& c, int d,
                                const typename FieldOps<F>::Ctx& ctx) {
  Index n = c.dim(d);
  if (n == 0) return {};
  Index r_out = 0, r_in = 0;
  if (const MatrixZ* out = c.boundary_at(d); out && out->rows() > 0)
    r_out = rank_f(to_field<F>(*out, ctx));
  if (const MatrixZ* in = c.boundary_at(d + 1); in && in->cols() > 0)
    r_in = rank_f(to_field<F>(*in, ctx));
  DegreeSummary s;
  s.free_rank = static_cast<long>(n - r_out - r_in);
  return s;
}

DegreeSummary z_homology_at(const ChainComplex& c, int d) {
  Index n = c.dim(d);
  if (n == 0) return {};
  Index r_out = 0, r_in = 0;
  std::vector<ZZ> torsion;
  if (const MatrixZ* out = c.boundary_at(d); out && out->rows() > 0) r_out = rank_z(*out);
  if (const MatrixZ* in = c.boundary_at(d + 1); in && in->cols() > 0) {
    SmithResult s = smith_normal_form(*in);
    r_in = s.rank;
    for (const ZZ& f : s.factors)
      if (f > ZZ(1)) torsion.push_back(f);
  }
  DegreeSummary s;
  s.free_rank = static_cast<long>(n - r_out - r_in);
  s.torsion = std::move(torsion);
  return s;
}

}  // namespace

DegreeSummary homology_at(const ChainComplex& c, int d) {
  switch (c.coeffs.kind) {
    case Coefficients::integers:
      return z_homology_at(c, d);
    case Coefficients::rationals:
      return field_homology_at<QQ>(c, d, QCtx{});
    default:
      return field_homology_at<Fp>(c, d, FpCtx{c.coeffs.p});
  }
}

HomologySummary homology(const ChainComplex& c) {
  HomologySummary out;
  out.coeffs = c.coeffs;
  for (int d = c.lo; d <= c.hi(); ++d) out.set(d, homology_at(c, d));
  return out;
}

namespace {

// cochain complex of c: degree d space is C_d with differential ∂_{d+1}^T
ChainComplex transpose_complex(const ChainComplex& c) {
  ChainComplex t;
  t.coeffs = c.coeffs;
  if (c.empty()) return t;
  // reverse degrees so that "homology" of t at (hi - d) is cohomology at d
  t.lo = 0;
  for (int d = c.hi(); d >= c.lo; --d) t.dims.push_back(c.dim(d));
  t.boundary.resize(t.dims.size());
  for (size_t i = 0; i < t.dims.size(); ++i) {
    int d = c.hi() - static_cast<int>(i);  // cochain degree
    if (i == 0) {
      t.boundary[i] = MatrixZ::Zero(0, t.dims[i]);
    } else {
      const MatrixZ* b = c.boundary_at(d + 1);
      POLYPROD_CHECK(b != nullptr, "transpose: missing boundary");
      t.boundary[i] = b->transpose();
    }
  }
  return t;
}

}  // namespace

HomologySummary cohomology(const ChainComplex& c) {
  ChainComplex t = transpose_complex(c);
  HomologySummary rev = homology(t);
  HomologySummary out;
  out.coeffs = c.coeffs;
  for (const auto& [i, g] : rev.groups) out.groups[c.hi() - i] = g;
  return out;
}

HomologySummary reduced_homology(const SimplicialComplex& k, Coefficients coeffs) {
  return homology(simplicial_chain(k, ChainVariant::reduced, coeffs));
}

HomologySummary reduced_cohomology(const SimplicialComplex& k, Coefficients coeffs) {
  return cohomology(simplicial_chain(k, ChainVariant::reduced, coeffs));
}

FreeHomologyBasis integral_homology_basis(const ChainComplex& c) {
  FreeHomologyBasis out;
  out.lo = c.lo;
  out.cycles.resize(static_cast<size_t>(c.degrees()));
  out.coord_maps.resize(static_cast<size_t>(c.degrees()));
  for (int d = c.lo; d <= c.hi(); ++d) {
    size_t i = static_cast<size_t>(d - c.lo);
    Index n = c.dim(d);
    if (n == 0) {
      out.cycles[i] = MatrixZ::Zero(0, 0);
      out.coord_maps[i] = MatrixZ::Zero(0, 0);
      continue;
    }
    // kernel of the outgoing boundary, as a saturated sublattice
    MatrixZ kernel_basis, kernel_coords;
    if (const MatrixZ* b = c.boundary_at(d); b && b->rows() > 0) {
      SmithResult s = smith_normal_form(*b, true);
      Index k = n - s.rank;
      kernel_basis = s.V.rightCols(k);
      kernel_coords = s.Vinv.bottomRows(k);
    } else {
      kernel_basis = MatrixZ::Identity(n, n);
      kernel_coords = MatrixZ::Identity(n, n);
    }
    Index k = kernel_basis.cols();
    // relations: incoming boundaries in kernel coordinates
    MatrixZ rel = MatrixZ::Zero(k, 0);
    if (const MatrixZ* in = c.boundary_at(d + 1); in && in->cols() > 0)
      rel = kernel_coords * (*in);
    SmithResult rs = smith_normal_form(rel, true);
    for (const ZZ& f : rs.factors)
      if (f > ZZ(1)) out.torsion_free = false;
    Index h = k - rs.rank;
    out.cycles[i] = kernel_basis * rs.Uinv.rightCols(h);
    out.coord_maps[i] = rs.U.bottomRows(h) * kernel_coords;
  }
  return out;
}

}  // namespace polyprod
