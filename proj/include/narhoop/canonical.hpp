#ifndef NARHOOP_CANONICAL_HPP
#define NARHOOP_CANONICAL_HPP

#include <compare>
#include <span>

#include "narhoop/magma.hpp"

namespace narhoop {

/// Permutation-minimal representative of an isomorphism class: the least
/// (mul, div) pair, flattened mul then div row-major, over all n! relabelings.
/// Two magmas are isomorphic iff their canonical forms are equal.
struct CanonicalForm {
  FiniteMagma magma;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.magma <=> b.magma;
  }
};

/// perm[x] is the new label of x: mul'[perm x][perm y] = perm(mul[x][y]).
FiniteMagma relabel(const FiniteMagma& m, std::span<const Element> perm);

CanonicalForm canonicalize(const MagmaView& m);
CanonicalForm canonicalize(const FiniteMagma& m);

bool isomorphic(const FiniteMagma& a, const FiniteMagma& b);

}  // namespace narhoop

#endif  // NARHOOP_CANONICAL_HPP
