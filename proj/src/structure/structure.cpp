#include "narhoop/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "narhoop/axioms.hpp"
#include "narhoop/errors.hpp"

namespace narhoop {

namespace {

using E = std::size_t;

void require_rres_n(const FiniteMagma& m, const char* op) {
  if (!is_member(m.view(), ModelClass::rres_n))
    throw PreconditionError(std::string(op) + " requires a right-residuated magma with ≤ from (N)");
}

std::string pair_text(const char* what, E x, E y) {
  std::ostringstream os;
  os << what << " at x=" << x << ", y=" << y;
  return os.str();
}

std::vector<Element> mask_to_members(std::uint32_t mask, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < n; ++x)
    if (mask & (1u << x)) out.push_back(static_cast<Element>(x));
  return out;
}

}  // namespace

SubsetView::SubsetView(const FiniteMagma& parent, std::vector<Element> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element x : members_)
    if (x >= parent.size()) throw PreconditionError("subset member outside the carrier");
}

bool SubsetView::contains(Element x) const { return std::binary_search(members_.begin(), members_.end(), x); }

bool SubsetView::is_sqcap_closed() const {
  for (Element x : members_)
    for (Element y : members_)
      if (!contains(parent_->sqcap(x, y))) return false;
  return true;
}

SubsetView principal_ideal(const FiniteMagma& m, Element a) {
  require_rres_n(m, "principal_ideal");
  if (a >= m.size()) throw PreconditionError("principal_ideal: element outside the carrier");
  std::vector<Element> below, images;
  for (E x = 0; x < m.size(); ++x) {
    if (m.leq(x, a)) below.push_back(static_cast<Element>(x));
    images.push_back(m.sqcap(a, x));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (below != images)
    throw InvariantViolation("{x : x <= a} and {a⊓x} differ for a=" + std::to_string(a) + " on " + m.to_string());
  SubsetView ideal(m, std::move(below));
  if (!ideal.is_sqcap_closed())
    throw InvariantViolation("principal ideal of " + std::to_string(a) + " is not ⊓-closed on " + m.to_string());
  return ideal;
}

std::vector<SubsetView> sqcap_closed_subsets(const FiniteMagma& m) {
  const std::size_t n = m.size();
  if (n > 20) throw PreconditionError("sqcap_closed_subsets supports carriers up to 20 elements");
  std::set<std::uint32_t> closed;
  for (std::uint32_t seed = 1; seed < (1u << n); ++seed) {
    std::uint32_t s = seed;
    bool grew = true;
    while (grew) {
      grew = false;
      for (E x = 0; x < n; ++x) {
        if (!(s & (1u << x))) continue;
        for (E y = 0; y < n; ++y) {
          if (!(s & (1u << y))) continue;
          const std::uint32_t bit = 1u << m.sqcap(x, y);
          if (!(s & bit)) {
            s |= bit;
            grew = true;
          }
        }
      }
    }
    closed.insert(s);
  }
  std::vector<SubsetView> out;
  for (std::uint32_t s : closed) out.emplace_back(m, mask_to_members(s, n));
  std::sort(out.begin(), out.end(), [](const SubsetView& a, const SubsetView& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

ReductRecord classify_reduct(const SubsetView& b) {
  const FiniteMagma& m = b.parent();
  if (!b.is_sqcap_closed()) throw PreconditionError("classify_reduct requires a ⊓-closed subset");
  require_rres_n(m, "classify_reduct");
  const auto& B = b.members();
  auto s = [&](E x, E y) -> E { return m.sqcap(x, y); };

  ReductRecord r;
  r.is_idempotent = std::all_of(B.begin(), B.end(), [&](Element x) { return s(x, x) == x; });
  bool assoc = true, ln = true, n8 = true, n9 = true, comm = true, n1 = true, lower = true;
  for (Element x : B) {
    for (Element y : B) {
      comm = comm && s(x, y) == s(y, x);
      n1 = n1 && s(s(x, y), x) == s(x, y);
      lower = lower && m.leq(s(x, y), y);
      n8 = n8 && s(x, s(y, x)) == s(x, y);
      for (Element z : B) {
        assoc = assoc && s(s(x, y), z) == s(x, s(y, z));
        ln = ln && s(s(x, y), z) == s(s(x, z), y);
        const E lhs = s(x, s(y, z));
        n9 = n9 && s(lhs, z) == lhs;
      }
    }
  }
  r.is_semigroup = assoc;
  r.is_lnb = r.is_idempotent && assoc && ln;
  r.satisfies_N8_N9 = n8 && n9;
  r.is_commutative = comm;
  r.is_semilattice = r.is_idempotent && assoc && comm;
  r.satisfies_N1_and_lower_bound = n1 && lower;
  return r;
}

UnitalityRecord unitality(const FiniteMagma& m) {
  require_rres_n(m, "unitality");
  const std::size_t n = m.size();
  UnitalityRecord r;

  r.units_constant = holds(m.view(), Axiom::UNITAL);
  r.units_act_as_identity = holds(m.view(), Axiom::RH1);
  for (E e = 0; e < n; ++e) {
    bool left_identity = true;
    for (E y = 0; y < n && left_identity; ++y) left_identity = m.mul(e, y) == y;
    if (left_identity) r.left_identities.push_back(static_cast<Element>(e));
  }
  r.has_left_identity = !r.left_identities.empty();
  r.is_unital = r.units_constant;
  if (r.units_constant != r.units_act_as_identity || r.units_constant != r.has_left_identity)
    r.violations.push_back("unitality conditions disagree");
  if (r.is_unital) r.unit = m.div(0, 0);

  for (E x = 0; x < n; ++x) {
    bool maximal = true;
    for (E y = 0; y < n && maximal; ++y) maximal = y == x || !m.leq(x, y);
    if (maximal) r.maximal_elements.push_back(static_cast<Element>(x));
  }
  for (E t = 0; t < n && !r.top; ++t) {
    bool is_top = true;
    for (E x = 0; x < n && is_top; ++x) is_top = m.leq(x, t);
    if (is_top) r.top = static_cast<Element>(t);
  }
  for (E b = 0; b < n && !r.bottom; ++b) {
    bool is_bottom = true;
    for (E x = 0; x < n && is_bottom; ++x) is_bottom = m.leq(b, x);
    if (is_bottom) r.bottom = static_cast<Element>(b);
  }

  // x/x is maximal and (x/x)y/y = x/x.
  for (E x = 0; x < n; ++x) {
    const Element u = m.div(x, x);
    if (std::find(r.maximal_elements.begin(), r.maximal_elements.end(), u) == r.maximal_elements.end())
      r.violations.push_back("x/x not maximal at x=" + std::to_string(x));
    for (E y = 0; y < n; ++y)
      if (m.div(m.mul(u, y), y) != u) r.violations.push_back(pair_text("(x/x)y/y != x/x", x, y));
  }

  if (r.top) {
    for (E x = 0; x < n; ++x)
      if (m.div(x, x) != *r.top) r.violations.push_back("top differs from x/x at x=" + std::to_string(x));
    if (!r.is_unital) r.violations.push_back("top exists but the magma is not unital");
    for (E x = 0; x < n; ++x)
      for (E y = 0; y < n; ++y)
        if (!m.leq(m.sqcap(x, y), x) || !m.leq(m.sqcap(x, y), y))
          r.violations.push_back(pair_text("x⊓y is not a lower bound", x, y));
    if (!r.bottom) r.violations.push_back("top exists but no bottom on a finite carrier");
  }
  if (r.bottom) {
    const Element zz = m.div(*r.bottom, *r.bottom);
    if (!r.top || *r.top != zz) r.violations.push_back("0/0 is not the top element");
  }

  if (r.is_unital) {
    const Element one = *r.unit;
    if (std::find(r.left_identities.begin(), r.left_identities.end(), one) == r.left_identities.end())
      r.violations.push_back("unit is not a left identity");
    for (Element e : r.left_identities)
      if (!m.leq(e, one)) r.violations.push_back("left identity " + std::to_string(e) + " is not below the unit");
    if (r.left_identities.size() != 1) r.violations.push_back("finite unital model with several left identities");
  }
  return r;
}

TopCommutativity check_top_iff_commutative(const FiniteMagma& m) {
  const MagmaView v = m.view();
  if (!is_member(v, ModelClass::narhoop) || !is_unital(v))
    throw PreconditionError("check_top_iff_commutative requires a unital narhoop");
  const std::size_t n = m.size();
  TopCommutativity t;
  t.unit = m.div(0, 0);
  t.unit_is_top = true;
  for (E x = 0; x < n && t.unit_is_top; ++x) {
    if (!m.leq(x, t.unit)) {
      t.unit_is_top = false;
      if (t.witness.empty()) t.witness = "x=" + std::to_string(x) + " is not below the unit";
    }
  }
  const Verdict comm = check_axiom(v, Axiom::COMM_SQCAP);
  t.sqcap_commutative = comm.holds;
  if (!comm.holds && t.witness.empty())
    t.witness = pair_text("⊓ not commutative", comm.witness[0], comm.witness[1]);
  t.equivalence_holds = t.unit_is_top == t.sqcap_commutative;

  std::vector<Element> ideal;
  for (E x = 0; x < n; ++x)
    if (m.leq(x, t.unit)) ideal.push_back(static_cast<Element>(x));
  const SubsetView view(m, ideal);
  t.unit_ideal_is_subnarhoop = true;
  for (Element a : ideal)
    for (Element b : ideal)
      if (!view.contains(m.mul(a, b)) || !view.contains(m.div(a, b))) t.unit_ideal_is_subnarhoop = false;
  t.unit_ideal_is_semilattice = view.is_sqcap_closed() && classify_reduct(view).is_semilattice;
  return t;
}

}  // namespace narhoop
