#ifndef NARHOOP_DERIVED_HPP
#define NARHOOP_DERIVED_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "narhoop/magma.hpp"

namespace narhoop {

/// The ⊓ table and the relation defined by x ≤ y  iff  x = y⊓x, together
/// with exhaustive partial-order diagnostics.
struct DerivedStructure {
  std::size_t n = 0;
  std::vector<Element> sqcap;
  std::vector<std::uint8_t> leq;
  /// x ≤' y  iff  x⊓y = x = y⊓x. Agrees with leq whenever N1 holds.
  std::vector<std::uint8_t> leq_two_sided;
  bool is_reflexive = false;
  bool is_antisymmetric = false;
  bool is_transitive = false;
  /// First (x,y,z) in lexicographic order at which reflexivity (at x),
  /// antisymmetry (at x,y) or transitivity (at x,y,z) fails.
  std::optional<std::array<Element, 3>> violation_witness;

  bool is_partial_order() const { return is_reflexive && is_antisymmetric && is_transitive; }
  bool le(std::size_t x, std::size_t y) const { return leq[x * n + y] != 0; }
  bool le_two_sided(std::size_t x, std::size_t y) const { return leq_two_sided[x * n + y] != 0; }
  Element meet(std::size_t x, std::size_t y) const { return sqcap[x * n + y]; }
  bool order_is_equality() const;
};

DerivedStructure derive(const FiniteMagma& m);

}  // namespace narhoop

#endif  // NARHOOP_DERIVED_HPP
