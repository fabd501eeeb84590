#include "narhoop/derived.hpp"

namespace narhoop {

bool DerivedStructure::order_is_equality() const {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (le(x, y) != (x == y)) return false;
  return true;
}

DerivedStructure derive(const FiniteMagma& m) {
  const std::size_t n = m.size();
  DerivedStructure d;
  d.n = n;
  d.sqcap.resize(n * n);
  d.leq.resize(n * n);
  d.leq_two_sided.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d.sqcap[x * n + y] = m.sqcap(x, y);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      d.leq[x * n + y] = d.sqcap[y * n + x] == x;
      d.leq_two_sided[x * n + y] = d.sqcap[x * n + y] == x && d.sqcap[y * n + x] == x;
    }
  }

  d.is_reflexive = d.is_antisymmetric = d.is_transitive = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const bool refl = d.le(x, x);
        const bool anti = !(d.le(x, y) && d.le(y, x)) || x == y;
        const bool trans = !(d.le(x, y) && d.le(y, z)) || d.le(x, z);
        d.is_reflexive = d.is_reflexive && refl;
        d.is_antisymmetric = d.is_antisymmetric && anti;
        d.is_transitive = d.is_transitive && trans;
        if (!(refl && anti && trans) && !d.violation_witness)
          d.violation_witness = std::array<Element, 3>{Element(x), Element(y), Element(z)};
      }
    }
  }
  return d;
}

}  // namespace narhoop
