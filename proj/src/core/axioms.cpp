#include "narhoop/axioms.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "narhoop/errors.hpp"

namespace narhoop {

namespace {

using E = std::size_t;

// One function per axiom; unused trailing arguments are ignored.
bool rres1(const MagmaView& m, E x, E y, E) {
  return m.leq(m.sqcap(x, y), x) && m.leq(x, m.div(m.mul(x, y), y));
}
bool rres2(const MagmaView& m, E x, E y, E z) {
  return !m.leq(x, y) || m.leq(m.mul(x, z), m.mul(y, z));
}
bool rres3(const MagmaView& m, E x, E y, E z) {
  return !m.leq(x, y) || m.leq(m.div(x, z), m.div(y, z));
}
bool rres(const MagmaView& m, E x, E y, E z) {
  return m.leq(m.mul(x, y), z) == m.leq(x, m.div(z, y));
}
bool order(const MagmaView& m, E x, E y, E z) {
  if (!m.leq(x, x)) return false;
  if (x != y && m.leq(x, y) && m.leq(y, x)) return false;
  return !(m.leq(x, y) && m.leq(y, z)) || m.leq(x, z);
}
bool n_prime(const MagmaView& m, E x, E y, E) {
  return m.leq(x, y) == (m.sqcap(x, y) == x && m.sqcap(y, x) == x);
}
bool n1(const MagmaView& m, E x, E y, E) {
  const E xy = m.sqcap(x, y);
  return m.sqcap(xy, x) == xy;
}
bool n2(const MagmaView& m, E x, E y, E) { return m.leq(x, m.div(m.mul(x, y), y)); }
bool n3(const MagmaView& m, E x, E y, E z) {
  return m.leq(m.mul(m.sqcap(x, y), z), m.mul(x, z));
}
bool n4(const MagmaView& m, E x, E y, E z) {
  return m.leq(m.div(m.sqcap(x, y), z), m.div(x, z));
}
bool n5(const MagmaView& m, E x, E y, E) { return m.sqcap(x, m.div(m.mul(x, y), y)) == x; }
bool n6(const MagmaView& m, E x, E y, E) { return m.div(m.sqcap(x, y), y) == m.div(x, y); }
bool n7(const MagmaView& m, E x, E y, E) {
  const E xy = m.sqcap(x, y);
  return m.sqcap(xy, y) == xy;
}
bool n8(const MagmaView& m, E x, E y, E) { return m.sqcap(x, m.sqcap(y, x)) == m.sqcap(x, y); }
bool n9(const MagmaView& m, E x, E y, E z) {
  const E lhs = m.sqcap(x, m.sqcap(y, z));
  return m.sqcap(lhs, z) == lhs;
}
bool ln(const MagmaView& m, E x, E y, E z) {
  return m.sqcap(m.sqcap(x, y), z) == m.sqcap(m.sqcap(x, z), y);
}
bool u(const MagmaView& m, E x, E y, E) {
  const E one = m.div(0, 0);
  return m.leq(x, y) == (m.div(y, x) == one);
}
bool unital(const MagmaView& m, E x, E y, E) { return m.div(x, x) == m.div(y, y); }
bool rq(const MagmaView& m, E x, E y, E) {
  return m.sqcap(x, y) == x && m.div(m.mul(x, y), y) == x;
}
bool rh1(const MagmaView& m, E x, E y, E) { return m.mul(m.div(x, x), y) == y; }
bool rh2(const MagmaView& m, E x, E y, E z) {
  return m.div(x, m.mul(y, z)) == m.div(m.div(x, z), y);
}
bool rh3(const MagmaView& m, E x, E y, E) { return m.sqcap(x, y) != x || m.leq(x, y); }
bool comm(const MagmaView& m, E x, E y, E) { return m.sqcap(x, y) == m.sqcap(y, x); }

using InstanceFn = bool (*)(const MagmaView&, E, E, E);

struct AxiomInfo {
  Axiom axiom;
  std::string_view name;
  int arity;
  InstanceFn fn;
};

constexpr std::array<AxiomInfo, kAxiomCount> kAxioms{{
    {Axiom::RRES1, "RRES1", 2, rres1},
    {Axiom::RRES2, "RRES2", 3, rres2},
    {Axiom::RRES3, "RRES3", 3, rres3},
    {Axiom::RRES, "RRES", 3, rres},
    {Axiom::N, "N", 3, order},
    {Axiom::N_PRIME, "N_PRIME", 2, n_prime},
    {Axiom::N1, "N1", 2, n1},
    {Axiom::N2, "N2", 2, n2},
    {Axiom::N3, "N3", 3, n3},
    {Axiom::N4, "N4", 3, n4},
    {Axiom::N5, "N5", 2, n5},
    {Axiom::N6, "N6", 2, n6},
    {Axiom::N7, "N7", 2, n7},
    {Axiom::N8, "N8", 2, n8},
    {Axiom::N9, "N9", 3, n9},
    {Axiom::LN, "LN", 3, ln},
    {Axiom::U, "U", 2, u},
    {Axiom::UNITAL, "UNITAL", 2, unital},
    {Axiom::RQ, "RQ", 2, rq},
    {Axiom::RH1, "RH1", 2, rh1},
    {Axiom::RH2, "RH2", 3, rh2},
    {Axiom::RH3, "RH3", 2, rh3},
    {Axiom::COMM_SQCAP, "COMM_SQCAP", 2, comm},
}};

constexpr std::array<Axiom, kAxiomCount> kAxiomList = [] {
  std::array<Axiom, kAxiomCount> out{};
  for (std::size_t i = 0; i < kAxiomCount; ++i) out[i] = kAxioms[i].axiom;
  return out;
}();

const AxiomInfo& info(Axiom a) { return kAxioms[static_cast<std::size_t>(a)]; }

template <InstanceFn Fn>
bool all_instances(const MagmaView& m, int arity) {
  const E n = m.n;
  const E ny = arity >= 2 ? n : 1;
  const E nz = arity >= 3 ? n : 1;
  for (E x = 0; x < n; ++x)
    for (E y = 0; y < ny; ++y)
      for (E z = 0; z < nz; ++z)
        if (!Fn(m, x, y, z)) return false;
  return true;
}

using HoldsFn = bool (*)(const MagmaView&, int);

template <std::size_t... I>
constexpr std::array<HoldsFn, kAxiomCount> make_holds_table(std::index_sequence<I...>) {
  return {&all_instances<kAxioms[I].fn>...};
}

constexpr auto kHolds = make_holds_table(std::make_index_sequence<kAxiomCount>{});

constexpr std::string_view kVarNames[] = {"x", "y", "z"};

}  // namespace

std::span<const Axiom> all_axioms() { return kAxiomList; }

std::string_view axiom_name(Axiom a) { return info(a).name; }

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (const auto& i : kAxioms)
    if (i.name == name) return i.axiom;
  return std::nullopt;
}

int axiom_arity(Axiom a) { return info(a).arity; }

bool instance_holds(const MagmaView& m, Axiom a, std::span<const Element> args) {
  const auto& i = info(a);
  if (args.size() != static_cast<std::size_t>(i.arity))
    throw std::invalid_argument("wrong number of arguments for axiom " + std::string(i.name));
  E v[3] = {0, 0, 0};
  for (std::size_t k = 0; k < args.size(); ++k) v[k] = args[k];
  return i.fn(m, v[0], v[1], v[2]);
}

bool holds(const MagmaView& m, Axiom a) {
  return kHolds[static_cast<std::size_t>(a)](m, info(a).arity);
}

std::string Verdict::describe() const {
  std::ostringstream os;
  os << axiom_name(axiom) << ": ";
  if (holds) {
    os << "holds";
  } else {
    os << "FAIL (witness ";
    for (std::size_t k = 0; k < witness.size(); ++k) {
      if (k > 0) os << ", ";
      os << kVarNames[k] << '=' << int(witness[k]);
    }
    os << ')';
  }
  return os.str();
}

const Verdict* AxiomReport::find(Axiom a) const {
  for (const auto& v : verdicts)
    if (v.axiom == a) return &v;
  return nullptr;
}

bool AxiomReport::holds(Axiom a) const {
  const Verdict* v = find(a);
  if (v == nullptr) throw std::out_of_range("axiom not in report: " + std::string(axiom_name(a)));
  return v->holds;
}

bool AxiomReport::all_hold() const {
  for (const auto& v : verdicts)
    if (!v.holds) return false;
  return true;
}

Verdict check_axiom(const MagmaView& m, Axiom a) {
  const auto& i = info(a);
  Verdict v{a, true, {}};
  const E n = m.n;
  const E ny = i.arity >= 2 ? n : 1;
  const E nz = i.arity >= 3 ? n : 1;
  for (E x = 0; x < n; ++x) {
    for (E y = 0; y < ny; ++y) {
      for (E z = 0; z < nz; ++z) {
        if (i.fn(m, x, y, z)) continue;
        v.holds = false;
        const Element all[3] = {Element(x), Element(y), Element(z)};
        v.witness.assign(all, all + i.arity);
        return v;
      }
    }
  }
  return v;
}

bool is_unital(const MagmaView& m) { return holds(m, Axiom::UNITAL); }

AxiomReport check_axioms(const FiniteMagma& m, std::span<const Axiom> axioms) {
  const MagmaView view = m.view();
  AxiomReport report;
  report.verdicts.reserve(axioms.size());
  for (Axiom a : axioms) {
    if (a == Axiom::U && !is_unital(view))
      throw PreconditionError("axiom U requires a unital magma (x/x constant)");
    report.verdicts.push_back(check_axiom(view, a));
  }
  return report;
}

AxiomReport check_axioms(const FiniteMagma& m, std::initializer_list<Axiom> axioms) {
  return check_axioms(m, std::span<const Axiom>(axioms.begin(), axioms.size()));
}

AxiomReport check_residuation(const FiniteMagma& m, const DerivedStructure& d) {
  if (d.n != m.size()) throw PreconditionError("derived structure does not belong to this magma");
  if (!d.is_partial_order())
    throw PreconditionError("check_residuation requires ≤ from (N) to be a partial order");
  AxiomReport report = check_axioms(m, {Axiom::RRES1, Axiom::RRES2, Axiom::RRES3, Axiom::RRES});
  const bool componentwise =
      report.holds(Axiom::RRES1) && report.holds(Axiom::RRES2) && report.holds(Axiom::RRES3);
  if (componentwise != report.holds(Axiom::RRES))
    throw InvariantViolation("RRES1-3 and the direct residuation check disagree on " + m.to_string());
  return report;
}

bool replay_falsifies(const MagmaView& m, const Verdict& v) {
  if (v.holds) return false;
  return !instance_holds(m, v.axiom, v.witness);
}

namespace {

constexpr Axiom kRresN[] = {Axiom::N, Axiom::RRES};
constexpr Axiom kNarhoop[] = {Axiom::N1, Axiom::N2, Axiom::N3, Axiom::N4};
constexpr Axiom kRightQuasigroup[] = {Axiom::RQ};
constexpr Axiom kRightHoop[] = {Axiom::COMM_SQCAP, Axiom::RH1, Axiom::RH2};
constexpr Axiom kUnitalNarhoop[] = {Axiom::N1, Axiom::N2, Axiom::N3, Axiom::N4, Axiom::UNITAL};

constexpr ModelClass kClasses[] = {ModelClass::rres_n, ModelClass::narhoop,
                                   ModelClass::right_quasigroup, ModelClass::right_hoop,
                                   ModelClass::unital_narhoop};
constexpr std::string_view kClassNames[] = {"rres_n", "narhoop", "right_quasigroup",
                                            "right_hoop", "unital_narhoop"};

}  // namespace

std::span<const ModelClass> all_model_classes() { return kClasses; }

std::string_view model_class_name(ModelClass c) { return kClassNames[static_cast<std::size_t>(c)]; }

ModelClass parse_model_class(std::string_view name) {
  for (ModelClass c : kClasses)
    if (model_class_name(c) == name) return c;
  throw UsageError("unknown class '" + std::string(name) +
                   "' (expected rres_n, narhoop, right_quasigroup, right_hoop or unital_narhoop)");
}

std::span<const Axiom> class_axioms(ModelClass c) {
  switch (c) {
    case ModelClass::rres_n: return kRresN;
    case ModelClass::narhoop: return kNarhoop;
    case ModelClass::right_quasigroup: return kRightQuasigroup;
    case ModelClass::right_hoop: return kRightHoop;
    case ModelClass::unital_narhoop: return kUnitalNarhoop;
  }
  return {};
}

bool is_member(const MagmaView& m, ModelClass c) {
  for (Axiom a : class_axioms(c))
    if (!holds(m, a)) return false;
  return true;
}

Classification classify(const FiniteMagma& m) {
  const MagmaView v = m.view();
  Classification c;
  c.is_right_residuated = is_member(v, ModelClass::rres_n);
  c.is_narhoop = is_member(v, ModelClass::narhoop);
  c.is_right_quasigroup = is_member(v, ModelClass::right_quasigroup);
  c.is_right_hoop = is_member(v, ModelClass::right_hoop);
  c.is_right_hoop_by_characterization =
      c.is_narhoop && holds(v, Axiom::RH2) && holds(v, Axiom::RH3);
  c.is_unital = is_unital(v);
  c.sqcap_commutative = holds(v, Axiom::COMM_SQCAP);
  c.sqcap_associative = true;
  for (E x = 0; x < m.size() && c.sqcap_associative; ++x)
    for (E y = 0; y < m.size() && c.sqcap_associative; ++y)
      for (E z = 0; z < m.size(); ++z)
        if (v.sqcap(v.sqcap(x, y), z) != v.sqcap(x, v.sqcap(y, z))) {
          c.sqcap_associative = false;
          break;
        }
  c.order_is_equality = derive(m).order_is_equality();
  return c;
}

}  // namespace narhoop
