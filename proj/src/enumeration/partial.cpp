#include "partial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace narhoop::detail {

namespace {

Tri truth(bool b) { return b ? Tri::yes : Tri::no; }

Tri eq(int a, int b) { return (a < 0 || b < 0) ? Tri::unknown : truth(a == b); }

Tri neg(Tri a) {
  if (a == Tri::unknown) return a;
  return a == Tri::yes ? Tri::no : Tri::yes;
}

Tri both(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::yes && b == Tri::yes) return Tri::yes;
  return Tri::unknown;
}

Tri either(Tri a, Tri b) { return neg(both(neg(a), neg(b))); }
Tri implies(Tri a, Tri b) { return either(neg(a), b); }

Tri iff(Tri a, Tri b) {
  if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
  return truth(a == b);
}

// a ≤ b  iff  a = b⊓a
Tri leq(const PartialTables& t, int a, int b) {
  if (a < 0 || b < 0) return Tri::unknown;
  return eq(t.sq(b, a), a);
}

}  // namespace

Tri partial_instance(const PartialTables& t, Axiom a, int x, int y, int z) {
  switch (a) {
    case Axiom::RRES1:
      return both(leq(t, t.sq(x, y), x), leq(t, x, t.d(t.m(x, y), y)));
    case Axiom::RRES2:
      return implies(leq(t, x, y), leq(t, t.m(x, z), t.m(y, z)));
    case Axiom::RRES3:
      return implies(leq(t, x, y), leq(t, t.d(x, z), t.d(y, z)));
    case Axiom::RRES:
      return iff(leq(t, t.m(x, y), z), leq(t, x, t.d(z, y)));
    case Axiom::N: {
      Tri r = leq(t, x, x);
      if (x != y) r = both(r, neg(both(leq(t, x, y), leq(t, y, x))));
      return both(r, implies(both(leq(t, x, y), leq(t, y, z)), leq(t, x, z)));
    }
    case Axiom::N_PRIME:
      return iff(leq(t, x, y), both(eq(t.sq(x, y), x), eq(t.sq(y, x), x)));
    case Axiom::N1: {
      const int xy = t.sq(x, y);
      return eq(t.sq(xy, x), xy);
    }
    case Axiom::N2: return leq(t, x, t.d(t.m(x, y), y));
    case Axiom::N3: return leq(t, t.m(t.sq(x, y), z), t.m(x, z));
    case Axiom::N4: return leq(t, t.d(t.sq(x, y), z), t.d(x, z));
    case Axiom::N5: return eq(t.sq(x, t.d(t.m(x, y), y)), x);
    case Axiom::N6: return eq(t.d(t.sq(x, y), y), t.d(x, y));
    case Axiom::N7: {
      const int xy = t.sq(x, y);
      return eq(t.sq(xy, y), xy);
    }
    case Axiom::N8: return eq(t.sq(x, t.sq(y, x)), t.sq(x, y));
    case Axiom::N9: {
      const int lhs = t.sq(x, t.sq(y, z));
      return eq(t.sq(lhs, z), lhs);
    }
    case Axiom::LN: return eq(t.sq(t.sq(x, y), z), t.sq(t.sq(x, z), y));
    case Axiom::U: {
      const int one = t.d(0, 0);
      return iff(leq(t, x, y), eq(t.d(y, x), one));
    }
    case Axiom::UNITAL: return eq(t.d(x, x), t.d(y, y));
    case Axiom::RQ: return both(eq(t.sq(x, y), x), eq(t.d(t.m(x, y), y), x));
    case Axiom::RH1: return eq(t.m(t.d(x, x), y), y);
    case Axiom::RH2: return eq(t.d(x, t.m(y, z)), t.d(t.d(x, z), y));
    case Axiom::RH3: return implies(eq(t.sq(x, y), x), leq(t, x, y));
    case Axiom::COMM_SQCAP: return eq(t.sq(x, y), t.sq(y, x));
  }
  throw std::logic_error("unhandled axiom " + std::string(axiom_name(a)));
}

std::vector<Constraint> pruning_constraints(std::span<const Axiom> axioms) {
  auto piece = [](Piece p, int arity) { return Constraint{static_cast<std::uint8_t>(p), arity}; };
  std::vector<Constraint> out{piece(Piece::channel, 2)};
  for (Axiom a : axioms) {
    switch (a) {
      case Axiom::N:
        out.push_back(piece(Piece::reflexive, 1));
        out.push_back(piece(Piece::antisymmetric, 2));
        out.push_back(piece(Piece::transitive, 3));
        break;
      case Axiom::RRES:
        out.push_back(piece(Piece::residuate_up, 3));
        out.push_back(piece(Piece::residuate_down, 3));
        break;
      case Axiom::RQ:
        out.push_back(piece(Piece::meet_fixes, 2));
        out.push_back(piece(Piece::division_cancels, 2));
        break;
      default: out.push_back(Constraint{static_cast<std::uint8_t>(a), axiom_arity(a)});
    }
  }
  // On a poset, residuation implies (x/y)y ≤ x ≤ xy/y and monotonicity of
  // both operations in the first argument. Redundant, but each has a short
  // lookup chain and prunes earlier than the bi-implication.
  const bool has_order = std::find(axioms.begin(), axioms.end(), Axiom::N) != axioms.end();
  const bool has_rres = std::find(axioms.begin(), axioms.end(), Axiom::RRES) != axioms.end();
  if (has_order && has_rres) {
    for (Axiom a : {Axiom::RRES1, Axiom::RRES2, Axiom::RRES3})
      out.push_back(Constraint{static_cast<std::uint8_t>(a), axiom_arity(a)});
  }
  return out;
}

Tri partial_constraint(const PartialTables& t, std::uint8_t id, int x, int y, int z) {
  if (id < kAxiomCount) return partial_instance(t, static_cast<Axiom>(id), x, y, z);
  switch (static_cast<Piece>(id)) {
    case Piece::reflexive: return leq(t, x, x);
    case Piece::antisymmetric:
      return x == y ? Tri::yes : neg(both(leq(t, x, y), leq(t, y, x)));
    case Piece::transitive: return implies(both(leq(t, x, y), leq(t, y, z)), leq(t, x, z));
    case Piece::residuate_up: return implies(leq(t, t.m(x, y), z), leq(t, x, t.d(z, y)));
    case Piece::residuate_down: return implies(leq(t, x, t.d(z, y)), leq(t, t.m(x, y), z));
    case Piece::meet_fixes: return eq(t.sq(x, y), x);
    case Piece::division_cancels: return eq(t.d(t.m(x, y), y), x);
    case Piece::channel: return eq(t.sq(x, y), t.sq_direct(x, y));
  }
  throw std::logic_error("unknown pruning constraint");
}

Tri partial_check(const PartialTables& t, std::span<const Axiom> axioms) {
  const int n = t.n;
  Tri result = Tri::yes;
  for (Axiom a : axioms) {
    const int arity = axiom_arity(a);
    const int ny = arity >= 2 ? n : 1;
    const int nz = arity >= 3 ? n : 1;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < ny; ++y)
        for (int z = 0; z < nz; ++z) {
          const Tri r = partial_instance(t, a, x, y, z);
          if (r == Tri::no) return Tri::no;
          if (r == Tri::unknown) result = Tri::unknown;
        }
  }
  return result;
}

}  // namespace narhoop::detail
