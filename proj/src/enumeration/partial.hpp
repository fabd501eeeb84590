#ifndef NARHOOP_ENUMERATION_PARTIAL_HPP
#define NARHOOP_ENUMERATION_PARTIAL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "narhoop/axioms.hpp"
#include "narhoop/enumerate.hpp"

namespace narhoop::detail {

/// Three-valued truth for axiom instances over partially filled tables.
enum class Tri : std::uint8_t { no, yes, unknown };

inline constexpr std::int8_t kUnassigned = -1;
inline constexpr std::size_t kMaxCells = kMaxSearchSize * kMaxSearchSize;  // per table

/// Operation tables in which a cell may still be unassigned, plus an
/// auxiliary ⊓ table searched alongside them and tied to them by the
/// `channel` constraint meet[x][y] = mul[div[x][y]][y]. Lookups with an
/// unknown argument or an unassigned cell yield -1; the first unassigned
/// cell hit since the last reset is remembered in `blocked`. Cells are
/// numbered mul 0..n²-1, div n²..2n²-1, meet 2n²..3n²-1.
struct PartialTables {
  int n = 0;
  std::array<std::int8_t, 3 * kMaxCells> cells;
  mutable int blocked = -1;

  explicit PartialTables(int size) : n(size) { cells.fill(kUnassigned); }

  int m(int a, int b) const { return lookup(a, b, 0); }
  int d(int a, int b) const { return lookup(a, b, n * n); }
  int sq(int a, int b) const { return lookup(a, b, 2 * n * n); }
  /// (a/b)·b through the operation tables, bypassing the ⊓ table.
  int sq_direct(int a, int b) const { return m(d(a, b), b); }

  int cell_count() const { return 3 * n * n; }

 private:
  int lookup(int a, int b, int offset) const {
    if (a < 0 || b < 0) return -1;
    const int cell = offset + a * n + b;
    const int v = cells[cell];
    if (v < 0 && blocked < 0) blocked = cell;
    return v;
  }
};

/// Truth value of one axiom instance given what is assigned so far.
Tri partial_instance(const PartialTables& t, Axiom a, int x, int y, int z);

/// Pruning constraints. Ids below kAxiomCount are axioms; the rest are
/// conjuncts of compound axioms, split so that each has its own first
/// unassigned lookup.
enum class Piece : std::uint8_t {
  reflexive = 64,  // x ≤ x
  antisymmetric,   // x ≤ y ∧ y ≤ x ⟹ x = y
  transitive,      // x ≤ y ∧ y ≤ z ⟹ x ≤ z
  residuate_up,    // xy ≤ z ⟹ x ≤ z/y
  residuate_down,  // x ≤ z/y ⟹ xy ≤ z
  meet_fixes,      // x⊓y = x
  division_cancels,  // (xy)/y = x
  channel,           // meet[x][y] = (x/y)y
};

struct Constraint {
  std::uint8_t id;
  int arity;
};

/// Conjunction-equivalent constraints for the given axioms, always
/// including the ⊓ channel.
std::vector<Constraint> pruning_constraints(std::span<const Axiom> axioms);

Tri partial_constraint(const PartialTables& t, std::uint8_t id, int x, int y, int z);

/// `no` as soon as some instance of some axiom is falsified.
Tri partial_check(const PartialTables& t, std::span<const Axiom> axioms);

}  // namespace narhoop::detail

#endif  // NARHOOP_ENUMERATION_PARTIAL_HPP
