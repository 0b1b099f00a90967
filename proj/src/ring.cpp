#include "polyprod/ring.hpp"

namespace polyprod {

bool family_admissible(const SimplicialComplex& k, const IndexPair& dst, const IndexPair& s1,
                       const IndexPair& s2, ProductFamily f) {
  if (f.right && (dst.sigma || s1.sigma || s2.sigma)) return false;
  const Mask su = s1.sigma | s2.sigma;
  const Mask wu = s1.omega | s2.omega;
  const Mask rest = dst.omega & ~wu;
  switch (f.family) {
    case Family::universal:
      return subset_of(su & ~dst.sigma, rest) && k.contains(rest);
    case Family::normal:
      return subset_of(su, dst.sigma) && rest == 0;
    case Family::strictly_normal:
      return su == dst.sigma && dst.omega == wu;
    case Family::special:
      return su == dst.sigma && (s1.sigma & s2.sigma) == 0 && dst.omega == wu &&
             (s1.omega & s2.omega) == 0;
    case Family::weakly_special:
      return su == dst.sigma && (s1.sigma & s2.sigma) == 0 && (s1.omega & s2.omega) == 0 &&
             k.contains(rest);
  }
  return false;
}

MatrixZ local_product(const SimplicialComplex& k, const IndexPair& s1, const IndexPair& s2,
                      const IndexPair& dst, ProductFamily f) {
  // degree-major concatenated bases of the three blocks
  auto labels_of = [&](const IndexPair& p) {
    std::vector<Mask> out;
    ChainComplex c = suspended_local_chain(k, p);
    for (const auto& l : c.labels) out.insert(out.end(), l.begin(), l.end());
    return out;
  };
  std::vector<Mask> ld = labels_of(dst), l1 = labels_of(s1), l2 = labels_of(s2);
  MatrixZ m = MatrixZ::Zero(static_cast<Index>(ld.size()),
                            static_cast<Index>(l1.size() * l2.size()));
  if (!family_admissible(k, dst, s1, s2, f)) return m;

  const Mask forced = forced_elements(dst, s1, s2);
  const Mask r1 = s1.omega & ~(s1.sigma | s2.sigma);
  const Mask r2 = (s2.omega & ~s1.omega) & ~(s1.sigma | s2.sigma);
  std::map<Mask, Index> pos;
  for (size_t i = 0; i < ld.size(); ++i) pos[ld[i]] = static_cast<Index>(i);
  for (size_t i = 0; i < l1.size(); ++i)
    for (size_t j = 0; j < l2.size(); ++j) {
      Mask t1 = l1[i], t2 = l2[j];
      if (!subset_of(t1, r1) || !subset_of(t2, r2)) continue;
      auto it = pos.find(t1 | t2 | forced);
      if (it == pos.end()) continue;
      // the second factor weighs the forced elements against the visible ones;
      // it is what makes the total product a cochain map (asserted in tests)
      m(it->second, static_cast<Index>(i * l2.size() + j)) =
          ZZ(shuffle_sign(t1, t2) * shuffle_sign(t1 | t2, forced));
    }
  return m;
}

}  // namespace polyprod
