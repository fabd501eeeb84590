#ifndef NARHOOP_AXIOMS_HPP
#define NARHOOP_AXIOMS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "narhoop/derived.hpp"
#include "narhoop/magma.hpp"

namespace narhoop {

// Every inequality below reads ≤ pointwise from (N): a ≤ b iff a = b⊓a.
enum class Axiom : std::uint8_t {
  RRES1,       // (x/y)y ≤ x ≤ xy/y
  RRES2,       // x ≤ y ⟹ xz ≤ yz
  RRES3,       // x ≤ y ⟹ x/z ≤ y/z
  RRES,        // xy ≤ z ⟺ x ≤ z/y
  N,           // the (N) relation is a partial order
  N_PRIME,     // x = y⊓x ⟺ x⊓y = x = y⊓x
  N1,          // (x⊓y)⊓x = x⊓y
  N2,          // x ≤ xy/y
  N3,          // (x⊓y)z ≤ xz
  N4,          // (x⊓y)/z ≤ x/z
  N5,          // x⊓(xy/y) = x
  N6,          // (x⊓y)/y = x/y
  N7,          // (x⊓y)⊓y = x⊓y
  N8,          // x⊓(y⊓x) = x⊓y
  N9,          // (x⊓(y⊓z))⊓z = x⊓(y⊓z)
  LN,          // (x⊓y)⊓z = (x⊓z)⊓y
  U,           // x ≤ y ⟺ y/x = 1   (unital magmas only)
  UNITAL,      // x/x = y/y
  RQ,          // x⊓y = x = (xy)/y
  RH1,         // (x/x)y = y
  RH2,         // x/(yz) = (x/z)/y
  RH3,         // x⊓y = x ⟹ x ≤ y
  COMM_SQCAP,  // x⊓y = y⊓x
};

inline constexpr std::size_t kAxiomCount = static_cast<std::size_t>(Axiom::COMM_SQCAP) + 1;

std::span<const Axiom> all_axioms();
std::string_view axiom_name(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view name);
/// Number of universally quantified variables (x, y, z) in the axiom.
int axiom_arity(Axiom a);

/// Evaluates one instance. `args` holds axiom_arity(a) carrier elements.
/// For U the caller guarantees the view is unital.
bool instance_holds(const MagmaView& m, Axiom a, std::span<const Element> args);

/// True when every instance holds. Short-circuits; no witness.
bool holds(const MagmaView& m, Axiom a);

struct Verdict {
  Axiom axiom;
  bool holds = true;
  /// Lexicographically first falsifying (x[,y[,z]]); empty when holds.
  std::vector<Element> witness;

  /// "N2: FAIL (witness x=0, y=0)" or "N2: holds".
  std::string describe() const;
};

struct AxiomReport {
  std::vector<Verdict> verdicts;

  const Verdict* find(Axiom a) const;
  /// Throws std::out_of_range when `a` was not checked.
  bool holds(Axiom a) const;
  bool all_hold() const;
};

Verdict check_axiom(const MagmaView& m, Axiom a);

/// Verdicts in the order requested. Throws PreconditionError naming U when U
/// is requested on a non-unital magma.
AxiomReport check_axioms(const FiniteMagma& m, std::span<const Axiom> axioms);
AxiomReport check_axioms(const FiniteMagma& m, std::initializer_list<Axiom> axioms);

/// RRES1, RRES2, RRES3 and the direct bi-implication RRES. The componentwise
/// conjunction and the direct route must agree or InvariantViolation is
/// thrown. Requires `d` (derived from `m`) to be a partial order.
AxiomReport check_residuation(const FiniteMagma& m, const DerivedStructure& d);

/// Re-evaluates a failing verdict's witness; true when it still falsifies.
bool replay_falsifies(const MagmaView& m, const Verdict& v);

bool is_unital(const MagmaView& m);

enum class ModelClass : std::uint8_t {
  rres_n,            // right-residuated with ≤ given by (N)
  narhoop,           // N1-N4
  right_quasigroup,  // RQ
  right_hoop,        // COMM_SQCAP, RH1, RH2
  unital_narhoop,    // N1-N4 and UNITAL
};

std::span<const ModelClass> all_model_classes();
std::string_view model_class_name(ModelClass c);
/// Throws UsageError on unknown names.
ModelClass parse_model_class(std::string_view name);
/// The defining axioms of a class; membership is their conjunction.
std::span<const Axiom> class_axioms(ModelClass c);
bool is_member(const MagmaView& m, ModelClass c);

struct Classification {
  bool is_right_residuated = false;  // (N) order is a partial order and RRES holds
  bool is_narhoop = false;
  bool is_right_quasigroup = false;
  bool is_right_hoop = false;                    // identities COMM_SQCAP, RH1, RH2
  bool is_right_hoop_by_characterization = false;  // narhoop with RH2 and RH3
  bool is_unital = false;
  bool sqcap_commutative = false;
  bool sqcap_associative = false;
  bool order_is_equality = false;

  bool right_hoop_routes_agree() const {
    return !is_narhoop || is_right_hoop == is_right_hoop_by_characterization;
  }
};

Classification classify(const FiniteMagma& m);

}  // namespace narhoop

#endif  // NARHOOP_AXIOMS_HPP
