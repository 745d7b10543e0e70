#include <algorithm>

#include "pslice/poly.hpp"

namespace pslice {

std::vector<Root> simple_roots(const UniPoly& u) {
  if (u.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const FieldCtx& base = u.ctx();
  const int deg = u.degree();
  const UniPoly du = u.derivative();
  std::vector<Root> out;
  // Every orbit of roots of size e uses up e of the deg available roots, so
  // the search can stop once no larger orbit fits.
  int used = 0;
  for (int e = 1; e <= deg - used; ++e) {
    const FieldCtx& ext = extension_of(base, e);
    const Embedding& emb = embedding(base, ext);
    const UniPoly ue = u.map(emb);
    const UniPoly due = du.map(emb);
    for (std::uint32_t i = 0; i < ext.q(); ++i) {
      const FieldElem x = ext.element(i);
      if (!ue(x).is_zero()) continue;
      const auto orbit = frobenius_orbit(x, base);
      if (static_cast<int>(orbit.size()) != e) continue;
      if (*std::min_element(orbit.begin(), orbit.end()) != x) continue;
      used += e;
      if (!due(x).is_zero()) out.push_back({x, &ext, e});
    }
  }
  return out;
}

}  // namespace pslice
