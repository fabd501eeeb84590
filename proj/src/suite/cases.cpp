#include <algorithm>
#include <array>
#include <exception>
#include <sstream>

#include "narhoop/axioms.hpp"
#include "narhoop/congruence.hpp"
#include "narhoop/derived.hpp"
#include "narhoop/errors.hpp"
#include "narhoop/structure.hpp"
#include "narhoop/suite.hpp"

namespace narhoop {

namespace {

using E = std::size_t;

struct CaseEntry {
  CaseId id;
  std::string_view name;
};

constexpr std::array kCases{
    CaseEntry{CaseId::THM_VARIETY_FWD, "THM_VARIETY_FWD"},
    CaseEntry{CaseId::THM_VARIETY_CONV, "THM_VARIETY_CONV"},
    CaseEntry{CaseId::INDEP_A1, "INDEP_A1"},
    CaseEntry{CaseId::INDEP_A2, "INDEP_A2"},
    CaseEntry{CaseId::INDEP_A3, "INDEP_A3"},
    CaseEntry{CaseId::INDEP_A4, "INDEP_A4"},
    CaseEntry{CaseId::CHAR_RQ, "CHAR_RQ"},
    CaseEntry{CaseId::CHAR_RH, "CHAR_RH"},
    CaseEntry{CaseId::THM_LNB, "THM_LNB"},
    CaseEntry{CaseId::THM_COMM_MEET, "THM_COMM_MEET"},
    CaseEntry{CaseId::THM_PRINCIPAL, "THM_PRINCIPAL"},
    CaseEntry{CaseId::LEM_PREUNITAL, "LEM_PREUNITAL"},
    CaseEntry{CaseId::LEM_UNITAL, "LEM_UNITAL"},
    CaseEntry{CaseId::THM_FINITE_UNIQUE, "THM_FINITE_UNIQUE"},
    CaseEntry{CaseId::THM_FINITE_UNIQUE_NARHOOP, "THM_FINITE_UNIQUE_NARHOOP"},
    CaseEntry{CaseId::PROP_U, "PROP_U"},
    CaseEntry{CaseId::THM_TOP_COMM, "THM_TOP_COMM"},
    CaseEntry{CaseId::THM_BOTTOM_TOP, "THM_BOTTOM_TOP"},
    CaseEntry{CaseId::LEM_CONG, "LEM_CONG"},
    CaseEntry{CaseId::THM_CONG, "THM_CONG"},
    CaseEntry{CaseId::LEM_PREORDER, "LEM_PREORDER"},
    CaseEntry{CaseId::THM_NORMAL, "THM_NORMAL"},
};

constexpr std::array<CaseId, kCases.size()> kCaseIds = [] {
  std::array<CaseId, kCases.size()> ids{};
  for (std::size_t i = 0; i < kCases.size(); ++i) ids[i] = kCases[i].id;
  return ids;
}();

CaseResult pass() { return {Outcome::pass, {}}; }
CaseResult skip() { return {Outcome::skip, {}}; }
CaseResult fail(std::string why) { return {Outcome::fail, std::move(why)}; }

std::string set_text(const std::vector<Element>& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << int(s[i]);
  os << '}';
  return os.str();
}

bool rres_n(const FiniteMagma& m) { return is_member(m.view(), ModelClass::rres_n); }
bool narhoop(const FiniteMagma& m) { return is_member(m.view(), ModelClass::narhoop); }

/// First failing verdict, or empty.
std::string first_failure(const AxiomReport& r) {
  for (const auto& v : r.verdicts)
    if (!v.holds) return v.describe();
  return {};
}

CaseResult variety_forward(const FiniteMagma& m) {
  if (!rres_n(m) || !holds(m.view(), Axiom::N_PRIME)) return skip();
  const std::string f = first_failure(check_axioms(m, {Axiom::N1, Axiom::N2, Axiom::N3, Axiom::N4}));
  return f.empty() ? pass() : fail(f);
}

CaseResult variety_converse(const FiniteMagma& m) {
  if (!narhoop(m)) return skip();
  std::string f = first_failure(check_axioms(m, {Axiom::N5, Axiom::N6, Axiom::N7, Axiom::N_PRIME}));
  if (!f.empty()) return fail(f);
  const DerivedStructure d = derive(m);
  if (!d.is_partial_order()) {
    const auto& w = *d.violation_witness;
    return fail("<= is not a partial order at (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                std::to_string(w[2]) + ")");
  }
  f = first_failure(check_residuation(m, d));
  return f.empty() ? pass() : fail(f);
}

CaseResult independence(const FiniteMagma& m, int i) {
  if (m != fixture("A" + std::to_string(i))) return skip();
  const std::array axioms{Axiom::N1, Axiom::N2, Axiom::N3, Axiom::N4};
  const AxiomReport r = check_axioms(m, axioms);
  for (int k = 0; k < 4; ++k) {
    const bool should_hold = k + 1 != i;
    if (r.verdicts[k].holds != should_hold)
      return fail(r.verdicts[k].describe() + (should_hold ? " (expected to hold)" : " (expected to fail)"));
  }
  return pass();
}

CaseResult char_rq(const FiniteMagma& m) {
  if (!narhoop(m)) return skip();
  const bool rq = holds(m.view(), Axiom::RQ);
  const bool eq = derive(m).order_is_equality();
  if (rq == eq) return pass();
  return fail(std::string("RQ ") + (rq ? "holds" : "fails") + " but <= is " + (eq ? "" : "not ") + "equality");
}

CaseResult char_rh(const FiniteMagma& m) {
  if (!narhoop(m)) return skip();
  const Classification c = classify(m);
  if (c.right_hoop_routes_agree()) return pass();
  return fail(std::string("right hoop identities ") + (c.is_right_hoop ? "hold" : "fail") +
              " but the characterization says " + (c.is_right_hoop_by_characterization ? "yes" : "no"));
}

CaseResult lnb(const FiniteMagma& m) {
  if (!rres_n(m)) return skip();
  for (const auto& b : sqcap_closed_subsets(m)) {
    const ReductRecord r = classify_reduct(b);
    if (r.is_lnb != r.is_semigroup || r.is_semigroup != r.satisfies_N8_N9)
      return fail("B=" + set_text(b.members()) + ": lnb=" + std::to_string(r.is_lnb) +
                  " semigroup=" + std::to_string(r.is_semigroup) + " N8+N9=" + std::to_string(r.satisfies_N8_N9));
  }
  return pass();
}

CaseResult comm_meet(const FiniteMagma& m) {
  if (!rres_n(m)) return skip();
  for (const auto& b : sqcap_closed_subsets(m)) {
    const ReductRecord r = classify_reduct(b);
    if (r.is_semilattice != r.is_commutative || r.is_commutative != r.satisfies_N1_and_lower_bound)
      return fail("B=" + set_text(b.members()) + ": semilattice=" + std::to_string(r.is_semilattice) +
                  " commutative=" + std::to_string(r.is_commutative) +
                  " N1+lower=" + std::to_string(r.satisfies_N1_and_lower_bound));
  }
  return pass();
}

CaseResult principal(const FiniteMagma& m) {
  if (!rres_n(m)) return skip();
  bool all_comm = true, all_assoc = true;
  for (E a = 0; a < m.size(); ++a) {
    // Throws InvariantViolation if (a] is not ⊓-closed.
    const ReductRecord r = classify_reduct(principal_ideal(m, static_cast<Element>(a)));
    all_comm = all_comm && r.is_commutative;
    all_assoc = all_assoc && r.is_semigroup;
  }
  const bool nh = narhoop(m);
  if (nh == all_comm && all_comm == all_assoc) return pass();
  return fail("narhoop=" + std::to_string(nh) + " ideals commutative=" + std::to_string(all_comm) +
              " ideals associative=" + std::to_string(all_assoc));
}

CaseResult preunital(const FiniteMagma& m) {
  if (!rres_n(m)) return skip();
  const UnitalityRecord u = unitality(m);
  const auto& maxima = u.maximal_elements;
  for (E x = 0; x < m.size(); ++x) {
    const Element xx = m.div(x, x);
    if (std::find(maxima.begin(), maxima.end(), xx) == maxima.end())
      return fail("x/x=" + std::to_string(xx) + " is not maximal at x=" + std::to_string(x));
    for (E y = 0; y < m.size(); ++y)
      if (m.div(m.mul(xx, y), y) != xx)
        return fail("(x/x)y/y != x/x at x=" + std::to_string(x) + ", y=" + std::to_string(y));
    if (u.top && *u.top != xx) return fail("top " + std::to_string(*u.top) + " != x/x at x=" + std::to_string(x));
  }
  return pass();
}

CaseResult unital_lemma(const FiniteMagma& m) {
  if (!rres_n(m)) return skip();
  const UnitalityRecord u = unitality(m);
  if (u.units_constant != u.units_act_as_identity || u.units_constant != u.has_left_identity)
    return fail("x/x constant=" + std::to_string(u.units_constant) +
                " (x/x)y=y=" + std::to_string(u.units_act_as_identity) +
                " left identity exists=" + std::to_string(u.has_left_identity));
  if (!u.is_unital) return pass();
  const Element one = *u.unit;
  const auto& ids = u.left_identities;
  if (std::find(ids.begin(), ids.end(), one) == ids.end())
    return fail("1=" + std::to_string(one) + " is not a left identity");
  for (Element e : ids)
    if (!m.leq(e, one)) return fail("left identity " + std::to_string(e) + " is not below 1=" + std::to_string(one));
  return pass();
}

CaseResult finite_unique(const FiniteMagma& m, bool narhoops_only) {
  if (!rres_n(m) || !is_unital(m.view())) return skip();
  if (narhoops_only && !narhoop(m)) return skip();
  const UnitalityRecord u = unitality(m);
  if (u.left_identities.size() == 1 && u.left_identities[0] == *u.unit) return pass();
  return fail("left identities " + set_text(u.left_identities) + ", 1=" + std::to_string(*u.unit));
}

bool unital_narhoop(const FiniteMagma& m) { return is_member(m.view(), ModelClass::unital_narhoop); }

CaseResult prop_u(const FiniteMagma& m) {
  if (!unital_narhoop(m)) return skip();
  const Verdict v = check_axiom(m.view(), Axiom::U);
  return v.holds ? pass() : fail(v.describe());
}

CaseResult top_comm(const FiniteMagma& m) {
  if (!unital_narhoop(m)) return skip();
  const TopCommutativity t = check_top_iff_commutative(m);
  if (t.holds()) return pass();
  std::ostringstream os;
  os << "1 top=" << t.unit_is_top << " ⊓ commutative=" << t.sqcap_commutative
     << " (1] subnarhoop=" << t.unit_ideal_is_subnarhoop << " (1] semilattice=" << t.unit_ideal_is_semilattice;
  if (!t.witness.empty()) os << "; " << t.witness;
  return fail(os.str());
}

CaseResult bottom_top(const FiniteMagma& m) {
  if (!rres_n(m)) return skip();
  const UnitalityRecord u = unitality(m);
  if (u.bottom) {
    const Element zz = m.div(*u.bottom, *u.bottom);
    if (!u.top || *u.top != zz) return fail("bottom " + std::to_string(*u.bottom) + " but 0/0 is not top");
  }
  if (u.top) {
    if (!u.is_unital) return fail("top exists but not unital");
    if (!u.bottom) return fail("top exists but no bottom");
    for (E x = 0; x < m.size(); ++x)
      for (E y = 0; y < m.size(); ++y)
        if (!m.leq(m.sqcap(x, y), x) || !m.leq(m.sqcap(x, y), y))
          return fail("x⊓y not a lower bound at x=" + std::to_string(x) + ", y=" + std::to_string(y));
  }
  return pass();
}

CaseResult congruence_lemma(const FiniteMagma& m) {
  if (!narhoop(m)) return skip();
  for (const auto& c : all_congruences(m)) {
    const FiniteMagma q = quotient(m, c);
    if (!narhoop(q)) return fail("quotient by " + partition_to_json(c.partition).dump() + " is not a narhoop");
    if (is_unital(q.view()) != c.is_unital)
      return fail("quotient unitality differs from the block test for " + partition_to_json(c.partition).dump());
    // Both readings of N_θ and the reconstruction x θ y iff x/y, y/x ∈ N_θ.
    if (c.is_unital) n_from_theta(m, c);
  }
  return pass();
}

CaseResult congruence_theorem(const FiniteMagma& m) {
  if (!narhoop(m)) return skip();
  for (const auto& c : all_congruences(m)) {
    if (!c.is_unital) continue;
    const SubsetAnalysis a = check_normal(m, *c.n_theta);
    if (!a.is_normal)
      return fail("N_theta=" + set_text(a.members) + ": " + subset_analysis_to_json(a).dump());
  }
  return pass();
}

CaseResult preorder_lemma(const FiniteMagma& m) {
  if (!narhoop(m)) return skip();
  for (const auto& s : normal_subsets(m)) {
    const PreorderReport r = n_preorder(m, s);
    if (!r.holds())
      return fail("N=" + set_text(s) + ": reflexive=" + std::to_string(r.is_reflexive) +
                  " transitive=" + std::to_string(r.is_transitive) + " mul=" + std::to_string(r.compatible_mul) +
                  " div=" + std::to_string(r.compatible_div));
  }
  return pass();
}

CaseResult normal_theorem(const FiniteMagma& m) {
  if (!narhoop(m)) return skip();
  for (const auto& s : normal_subsets(m)) theta_from_N(m, s);
  const Correspondence c = unital_correspondence(m);
  return c.bijective ? pass() : fail(c.witness);
}

CaseResult dispatch(CaseId id, const FiniteMagma& m) {
  switch (id) {
    case CaseId::THM_VARIETY_FWD: return variety_forward(m);
    case CaseId::THM_VARIETY_CONV: return variety_converse(m);
    case CaseId::INDEP_A1: return independence(m, 1);
    case CaseId::INDEP_A2: return independence(m, 2);
    case CaseId::INDEP_A3: return independence(m, 3);
    case CaseId::INDEP_A4: return independence(m, 4);
    case CaseId::CHAR_RQ: return char_rq(m);
    case CaseId::CHAR_RH: return char_rh(m);
    case CaseId::THM_LNB: return lnb(m);
    case CaseId::THM_COMM_MEET: return comm_meet(m);
    case CaseId::THM_PRINCIPAL: return principal(m);
    case CaseId::LEM_PREUNITAL: return preunital(m);
    case CaseId::LEM_UNITAL: return unital_lemma(m);
    case CaseId::THM_FINITE_UNIQUE: return finite_unique(m, false);
    case CaseId::THM_FINITE_UNIQUE_NARHOOP: return finite_unique(m, true);
    case CaseId::PROP_U: return prop_u(m);
    case CaseId::THM_TOP_COMM: return top_comm(m);
    case CaseId::THM_BOTTOM_TOP: return bottom_top(m);
    case CaseId::LEM_CONG: return congruence_lemma(m);
    case CaseId::THM_CONG: return congruence_theorem(m);
    case CaseId::LEM_PREORDER: return preorder_lemma(m);
    case CaseId::THM_NORMAL: return normal_theorem(m);
  }
  throw UsageError("unknown case id");
}

}  // namespace

std::span<const CaseId> all_cases() { return kCaseIds; }

std::string_view case_name(CaseId id) {
  for (const auto& c : kCases)
    if (c.id == id) return c.name;
  return "?";
}

CaseId parse_case(std::string_view name) {
  for (const auto& c : kCases)
    if (c.name == name) return c.id;
  throw UsageError("unknown theorem case: " + std::string(name));
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::skip: return "SKIP";
  }
  return "?";
}

CaseResult run_case(CaseId id, const FiniteMagma& m) {
  try {
    return dispatch(id, m);
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

}  // namespace narhoop
