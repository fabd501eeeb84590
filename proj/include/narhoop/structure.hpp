#ifndef NARHOOP_STRUCTURE_HPP
#define NARHOOP_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "narhoop/magma.hpp"

namespace narhoop {

/// A subset of a magma's carrier, members ascending. Holds a pointer to the
/// parent, which must outlive the view.
class SubsetView {
 public:
  SubsetView(const FiniteMagma& parent, std::vector<Element> members);

  const FiniteMagma& parent() const { return *parent_; }
  const std::vector<Element>& members() const { return members_; }
  bool contains(Element x) const;
  std::size_t size() const { return members_.size(); }
  bool is_sqcap_closed() const;

  friend bool operator==(const SubsetView& a, const SubsetView& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const FiniteMagma* parent_;
  std::vector<Element> members_;
};

/// (a] computed as {x : x ≤ a} and as {a⊓x : x ∈ A}. Requires an rres_n
/// model (PreconditionError otherwise); the two routes disagreeing, or the
/// result not being ⊓-closed, raises InvariantViolation.
SubsetView principal_ideal(const FiniteMagma& m, Element a);

/// Every nonempty ⊓-closed subset, found by closing each subset under ⊓.
/// Ordered by size, then lexicographically. Carriers above 20 elements are
/// rejected with PreconditionError.
std::vector<SubsetView> sqcap_closed_subsets(const FiniteMagma& m);

struct ReductRecord {
  bool is_idempotent = false;
  bool is_lnb = false;        // idempotent, associative, (x⊓y)⊓z = (x⊓z)⊓y
  bool is_semigroup = false;  // associative
  bool satisfies_N8_N9 = false;
  bool is_semilattice = false;  // idempotent, associative, commutative
  bool is_commutative = false;
  bool satisfies_N1_and_lower_bound = false;  // N1 and x⊓y ≤ y on B
};

/// All flags by exhaustive evaluation over B. Requires B ⊓-closed and the
/// parent rres_n (PreconditionError otherwise).
ReductRecord classify_reduct(const SubsetView& b);

struct UnitalityRecord {
  bool is_unital = false;
  std::optional<Element> unit;
  std::vector<Element> left_identities;
  std::vector<Element> maximal_elements;
  std::optional<Element> top;
  std::optional<Element> bottom;

  // The three equivalent conditions, each evaluated on its own.
  bool units_constant = false;            // x/x = y/y
  bool units_act_as_identity = false;     // (x/x)y = y
  bool has_left_identity = false;         // ∃e ∀y: ey = y

  /// Statements that should hold on every rres_n model but failed here,
  /// each with a short witness. Empty on a healthy model.
  std::vector<std::string> violations;
};

/// Requires an rres_n model (PreconditionError otherwise).
UnitalityRecord unitality(const FiniteMagma& m);

struct TopCommutativity {
  Element unit = 0;
  bool unit_is_top = false;
  bool sqcap_commutative = false;
  bool equivalence_holds = false;
  bool unit_ideal_is_subnarhoop = false;   // (1] closed under · and /
  bool unit_ideal_is_semilattice = false;  // ((1],⊓)
  std::string witness;  // first failing pair when a side is false

  bool holds() const { return equivalence_holds && unit_ideal_is_subnarhoop && unit_ideal_is_semilattice; }
};

/// Requires a unital narhoop (PreconditionError otherwise).
TopCommutativity check_top_iff_commutative(const FiniteMagma& m);

}  // namespace narhoop

#endif  // NARHOOP_STRUCTURE_HPP
