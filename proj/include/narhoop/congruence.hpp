#ifndef NARHOOP_CONGRUENCE_HPP
#define NARHOOP_CONGRUENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "narhoop/io.hpp"
#include "narhoop/magma.hpp"

namespace narhoop {

using ElementSet = std::vector<Element>;  // ascending, no duplicates

/// An equivalence relation on the carrier. Block ids are assigned in order of
/// each block's least element, so equal relations compare equal.
class Partition {
 public:
  /// Throws PreconditionError unless every id lies in [0, n).
  explicit Partition(const std::vector<std::size_t>& block_of);

  static Partition identity(std::size_t n);
  static Partition full(std::size_t n);
  static Partition from_blocks(std::size_t n, const std::vector<ElementSet>& blocks);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(Element x) const { return block_of_[x]; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  bool related(Element x, Element y) const { return block_of_[x] == block_of_[y]; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.block_of_ == b.block_of_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.blocks_ <=> b.blocks_; }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<ElementSet> blocks_;
};

struct CongruenceInfo {
  Partition partition;
  bool is_congruence = false;
  /// All x/x in one block.
  bool is_unital = false;
  /// That block, when unital.
  std::optional<ElementSet> n_theta;
};

/// Flags for an arbitrary partition.
CongruenceInfo analyze_partition(const FiniteMagma& m, const Partition& p);

/// Smallest congruence identifying a and b: merges f(..a..) with f(..b..) for
/// both operations in both argument positions until stable.
CongruenceInfo principal_congruence(const FiniteMagma& m, Element a, Element b);

/// Every congruence, from principal congruences closed under joins.
/// Ordered by block count descending, then by blocks.
std::vector<CongruenceInfo> all_congruences(const FiniteMagma& m);

/// Same set by filtering every set partition of the carrier (n ≤ 10).
std::vector<CongruenceInfo> congruences_by_partition_filter(const FiniteMagma& m);

/// Block lists, e.g. [[0,2],[1]].
Json partition_to_json(const Partition& p);
Json congruence_to_json(const CongruenceInfo& c);

/// Factor algebra on blocks, block i becoming element i. Throws
/// PreconditionError when `c` is not a congruence.
FiniteMagma quotient(const FiniteMagma& m, const CongruenceInfo& c);

struct InnGenerator {
  int family = 1;  // 1..6
  Element x = 0;
  Element y = 0;
  std::vector<Element> map;  // z ↦ φ(z)
};

/// All 6·n² maps
///   φ1(z) = (zx·y)/xy      φ2(z) = (zx/y)/(x/y)   φ3(z) = (x·zy)/xy
///   φ4(z) = (x/zy)/(x/y)   φ5(z) = xy/(x·zy)      φ6(z) = (x/y)/(x/zy)
/// ordered by family, x, y. Each map is cross-checked against a term
/// evaluation of its definition (InvariantViolation on mismatch).
std::vector<InnGenerator> inn_generators(const FiniteMagma& m);

struct SubsetAnalysis {
  ElementSet members;
  bool is_subnarhoop = false;     // closed under · and /
  bool is_upward_closed = false;  // x ≤ y, x ∈ N ⟹ y ∈ N
  bool is_inn_invariant = false;  // closed under every generator map
  bool is_normal = false;
  std::string subnarhoop_witness;
  std::string upward_witness;
  std::string inn_witness;
};

/// Requires a narhoop and nonempty N (PreconditionError otherwise).
SubsetAnalysis check_normal(const FiniteMagma& m, const ElementSet& members);

/// Every nonempty normal subset, ordered by size then members. n ≤ 20.
std::vector<ElementSet> normal_subsets(const FiniteMagma& m);

struct PreorderReport {
  std::size_t n = 0;
  std::vector<std::uint8_t> relation;  // relation[x*n+y]: x ⪯ y iff y/x ∈ N
  bool is_reflexive = false;
  bool is_transitive = false;
  bool compatible_mul = false;  // x ⪯ y ⟹ xz ⪯ yz
  bool compatible_div = false;  // x ⪯ y ⟹ x/z ⪯ y/z

  bool related(std::size_t x, std::size_t y) const { return relation[x * n + y] != 0; }
  bool holds() const { return is_reflexive && is_transitive && compatible_mul && compatible_div; }
};

/// Requires N normal (PreconditionError otherwise).
PreorderReport n_preorder(const FiniteMagma& m, const ElementSet& members);

/// x θ y iff x/y, y/x ∈ N. Requires N normal in a narhoop. Throws
/// TheoremViolation unless θ is an equivalence, a congruence, unital and
/// has N as its unit class.
CongruenceInfo theta_from_N(const FiniteMagma& m, const ElementSet& members);

/// The unit class of a unital congruence. Both readings (x θ y/y for some y
/// and for all y) are computed; the class must be normal and must rebuild
/// the congruence via x θ y iff x/y, y/x ∈ N_θ. Throws TheoremViolation on
/// any mismatch and PreconditionError for non-narhoops or non-unital input.
ElementSet n_from_theta(const FiniteMagma& m, const CongruenceInfo& c);

struct Correspondence {
  std::vector<CongruenceInfo> unital_congruences;
  std::vector<ElementSet> normal_subsets;
  /// θ ↦ N_θ and N ↦ θ_N are mutually inverse between the two lists.
  bool bijective = false;
  std::string witness;
};

Json subset_analysis_to_json(const SubsetAnalysis& a);

/// Pairs unital congruences with normal subsets on a narhoop. Theorem
/// failures are caught and reported through `bijective`/`witness`.
Correspondence unital_correspondence(const FiniteMagma& m);

}  // namespace narhoop

#endif  // NARHOOP_CONGRUENCE_HPP
