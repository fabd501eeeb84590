#include <algorithm>
#include <array>
#include <sstream>

#include "narhoop/axioms.hpp"
#include "narhoop/congruence.hpp"
#include "narhoop/errors.hpp"
#include "narhoop/term.hpp"

namespace narhoop {

namespace {

using E = std::size_t;

Element phi(const FiniteMagma& m, int family, E x, E y, E z) {
  switch (family) {
    case 1: return m.div(m.mul(m.mul(z, x), y), m.mul(x, y));
    case 2: return m.div(m.div(m.mul(z, x), y), m.div(x, y));
    case 3: return m.div(m.mul(x, m.mul(z, y)), m.mul(x, y));
    case 4: return m.div(m.div(x, m.mul(z, y)), m.div(x, y));
    case 5: return m.div(m.mul(x, y), m.mul(x, m.mul(z, y)));
    case 6: return m.div(m.div(x, y), m.div(x, m.mul(z, y)));
  }
  throw PreconditionError("phi family must be 1..6");
}

// Variables: 0 = x, 1 = y, 2 = z.
std::array<Term, 6> phi_terms() {
  const Term x = Term::var(0), y = Term::var(1), z = Term::var(2);
  return {((z * x) * y) / (x * y),      ((z * x) / y) / (x / y),   (x * (z * y)) / (x * y),
          (x / (z * y)) / (x / y),      (x * y) / (x * (z * y)),   (x / y) / (x / (z * y))};
}

void require_narhoop(const FiniteMagma& m, const char* op) {
  if (!is_member(m.view(), ModelClass::narhoop)) throw PreconditionError(std::string(op) + " requires a narhoop");
}

ElementSet normalize(const FiniteMagma& m, ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Element x : s)
    if (x >= m.size()) throw PreconditionError("subset member outside the carrier");
  return s;
}

std::vector<bool> indicator(const FiniteMagma& m, const ElementSet& s) {
  std::vector<bool> in(m.size(), false);
  for (Element x : s) in[x] = true;
  return in;
}

std::string set_text(const ElementSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << int(s[i]);
  os << '}';
  return os.str();
}

bool is_normal_unchecked(const FiniteMagma& m, const std::vector<InnGenerator>& gens, const std::vector<bool>& in) {
  const std::size_t n = m.size();
  for (E x = 0; x < n; ++x) {
    if (!in[x]) continue;
    for (E y = 0; y < n; ++y) {
      if (in[y] && (!in[m.mul(x, y)] || !in[m.div(x, y)])) return false;
      if (!in[y] && m.leq(x, y)) return false;
    }
    for (const auto& g : gens)
      if (!in[g.map[x]]) return false;
  }
  return true;
}

}  // namespace

std::vector<InnGenerator> inn_generators(const FiniteMagma& m) {
  const std::size_t n = m.size();
  const auto terms = phi_terms();
  const MagmaView v = m.view();
  std::vector<InnGenerator> out;
  out.reserve(6 * n * n);
  for (int f = 1; f <= 6; ++f)
    for (E x = 0; x < n; ++x)
      for (E y = 0; y < n; ++y) {
        InnGenerator g{f, static_cast<Element>(x), static_cast<Element>(y), std::vector<Element>(n)};
        for (E z = 0; z < n; ++z) {
          g.map[z] = phi(m, f, x, y, z);
          const std::array<Element, 3> env{static_cast<Element>(x), static_cast<Element>(y), static_cast<Element>(z)};
          if (terms[f - 1].eval(v, env) != g.map[z])
            throw InvariantViolation("phi" + std::to_string(f) + " table evaluation disagrees with its term on " +
                                     m.to_string());
        }
        out.push_back(std::move(g));
      }
  return out;
}

SubsetAnalysis check_normal(const FiniteMagma& m, const ElementSet& members) {
  require_narhoop(m, "check_normal");
  SubsetAnalysis a;
  a.members = normalize(m, members);
  if (a.members.empty()) throw PreconditionError("check_normal: N must be nonempty");
  const auto in = indicator(m, a.members);
  const std::size_t n = m.size();

  a.is_subnarhoop = true;
  for (Element x : a.members) {
    for (Element y : a.members) {
      std::ostringstream os;
      if (!in[m.mul(x, y)])
        os << int(x) << "*" << int(y) << "=" << int(m.mul(x, y)) << " not in N";
      else if (!in[m.div(x, y)])
        os << int(x) << "/" << int(y) << "=" << int(m.div(x, y)) << " not in N";
      else
        continue;
      a.is_subnarhoop = false;
      a.subnarhoop_witness = os.str();
      break;
    }
    if (!a.is_subnarhoop) break;
  }

  a.is_upward_closed = true;
  for (Element x : a.members) {
    for (E y = 0; y < n && a.is_upward_closed; ++y)
      if (!in[y] && m.leq(x, y)) {
        a.is_upward_closed = false;
        a.upward_witness = std::to_string(x) + "<=" + std::to_string(y) + ", " + std::to_string(y) + " not in N";
      }
    if (!a.is_upward_closed) break;
  }

  a.is_inn_invariant = true;
  for (const auto& g : inn_generators(m)) {
    for (Element z : a.members)
      if (!in[g.map[z]]) {
        a.is_inn_invariant = false;
        std::ostringstream os;
        os << "phi" << g.family << "[x=" << int(g.x) << ",y=" << int(g.y) << "](" << int(z) << ")=" << int(g.map[z])
           << " not in N";
        a.inn_witness = os.str();
        break;
      }
    if (!a.is_inn_invariant) break;
  }

  a.is_normal = a.is_subnarhoop && a.is_upward_closed && a.is_inn_invariant;
  return a;
}

std::vector<ElementSet> normal_subsets(const FiniteMagma& m) {
  require_narhoop(m, "normal_subsets");
  const std::size_t n = m.size();
  if (n > 20) throw PreconditionError("normal_subsets supports carriers up to 20 elements");
  const auto gens = inn_generators(m);
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<bool> in(n);
    ElementSet s;
    for (E x = 0; x < n; ++x)
      if (mask & (1u << x)) {
        in[x] = true;
        s.push_back(static_cast<Element>(x));
      }
    if (is_normal_unchecked(m, gens, in)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

PreorderReport n_preorder(const FiniteMagma& m, const ElementSet& members) {
  const SubsetAnalysis a = check_normal(m, members);
  if (!a.is_normal) throw PreconditionError("n_preorder: " + set_text(a.members) + " is not normal");
  const std::size_t n = m.size();
  const auto in = indicator(m, a.members);
  PreorderReport r;
  r.n = n;
  r.relation.resize(n * n);
  for (E x = 0; x < n; ++x)
    for (E y = 0; y < n; ++y) r.relation[x * n + y] = in[m.div(y, x)];
  r.is_reflexive = r.is_transitive = r.compatible_mul = r.compatible_div = true;
  for (E x = 0; x < n; ++x) {
    if (!r.related(x, x)) r.is_reflexive = false;
    for (E y = 0; y < n; ++y) {
      if (!r.related(x, y)) continue;
      for (E z = 0; z < n; ++z) {
        if (r.related(y, z) && !r.related(x, z)) r.is_transitive = false;
        if (!r.related(m.mul(x, z), m.mul(y, z))) r.compatible_mul = false;
        if (!r.related(m.div(x, z), m.div(y, z))) r.compatible_div = false;
      }
    }
  }
  return r;
}

CongruenceInfo theta_from_N(const FiniteMagma& m, const ElementSet& members) {
  const SubsetAnalysis a = check_normal(m, members);
  if (!a.is_normal) throw PreconditionError("theta_from_N: " + set_text(a.members) + " is not normal");
  const std::size_t n = m.size();
  const auto in = indicator(m, a.members);
  auto theta = [&](E x, E y) { return in[m.div(x, y)] && in[m.div(y, x)]; };
  const std::string where = " for N=" + set_text(a.members) + " on " + m.to_string();

  // Build blocks from the relation and confirm it is an equivalence.
  std::vector<std::size_t> ids(n, n);
  for (E x = 0; x < n; ++x) {
    if (!theta(x, x)) throw TheoremViolation("theta_N is not reflexive" + where);
    if (ids[x] != n) continue;
    for (E y = x; y < n; ++y)
      if (theta(x, y)) {
        if (ids[y] != n) throw TheoremViolation("theta_N is not transitive" + where);
        ids[y] = x;
      }
  }
  Partition p(ids);
  for (E x = 0; x < n; ++x)
    for (E y = 0; y < n; ++y)
      if (theta(x, y) != p.related(x, y)) throw TheoremViolation("theta_N is not an equivalence" + where);

  CongruenceInfo info = analyze_partition(m, p);
  if (!info.is_congruence) throw TheoremViolation("theta_N is not a congruence" + where);
  if (!info.is_unital) throw TheoremViolation("theta_N is not unital" + where);
  if (*info.n_theta != a.members) throw TheoremViolation("N of theta_N differs from N" + where);
  return info;
}

ElementSet n_from_theta(const FiniteMagma& m, const CongruenceInfo& c) {
  require_narhoop(m, "n_from_theta");
  if (c.partition.size() != m.size()) throw PreconditionError("partition and magma sizes differ");
  const CongruenceInfo info = analyze_partition(m, c.partition);
  if (!info.is_congruence) throw PreconditionError("n_from_theta: partition is not a congruence");
  if (!info.is_unital) throw PreconditionError("n_from_theta: congruence is not unital");
  const std::size_t n = m.size();
  const Partition& p = c.partition;
  const std::string where = " on " + m.to_string();

  ElementSet some, all;
  for (E x = 0; x < n; ++x) {
    bool any_y = false, every_y = true;
    for (E y = 0; y < n; ++y) {
      const bool r = p.related(x, m.div(y, y));
      any_y = any_y || r;
      every_y = every_y && r;
    }
    if (any_y) some.push_back(static_cast<Element>(x));
    if (every_y) all.push_back(static_cast<Element>(x));
  }
  if (some != all) throw TheoremViolation("the two readings of N_theta differ" + where);
  if (some != *info.n_theta) throw TheoremViolation("N_theta is not the block of the units" + where);

  const SubsetAnalysis a = check_normal(m, some);
  if (!a.is_normal) {
    const std::string why = !a.is_subnarhoop ? a.subnarhoop_witness
                            : !a.is_upward_closed ? a.upward_witness
                                                  : a.inn_witness;
    throw TheoremViolation("N_theta=" + set_text(some) + " is not normal (" + why + ")" + where);
  }

  const auto in = indicator(m, some);
  for (E x = 0; x < n; ++x)
    for (E y = 0; y < n; ++y)
      if (p.related(x, y) != (in[m.div(x, y)] && in[m.div(y, x)]))
        throw TheoremViolation("x theta y differs from x/y, y/x in N_theta at x=" + std::to_string(x) +
                               ", y=" + std::to_string(y) + where);
  return some;
}

Correspondence unital_correspondence(const FiniteMagma& m) {
  require_narhoop(m, "unital_correspondence");
  Correspondence out;
  for (auto& c : all_congruences(m))
    if (c.is_unital) out.unital_congruences.push_back(std::move(c));
  out.normal_subsets = normal_subsets(m);
  try {
    std::vector<ElementSet> images;
    for (const auto& c : out.unital_congruences) {
      ElementSet nt = n_from_theta(m, c);
      if (theta_from_N(m, nt).partition != c.partition)
        throw TheoremViolation("theta of N_theta differs from theta for N_theta=" + set_text(nt));
      images.push_back(std::move(nt));
    }
    for (const auto& s : out.normal_subsets) {
      theta_from_N(m, s);
      if (std::find(images.begin(), images.end(), s) == images.end())
        throw TheoremViolation("normal subset " + set_text(s) + " is not N_theta for any unital congruence");
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      throw TheoremViolation("two unital congruences share N_theta");
    if (images.size() != out.normal_subsets.size())
      throw TheoremViolation("unital congruences and normal subsets differ in number");
    out.bijective = true;
  } catch (const TheoremViolation& e) {
    out.bijective = false;
    out.witness = e.what();
  }
  return out;
}

Json subset_analysis_to_json(const SubsetAnalysis& a) {
  Json j;
  j["members"] = a.members;
  j["is_subnarhoop"] = a.is_subnarhoop;
  j["is_upward_closed"] = a.is_upward_closed;
  j["is_inn_invariant"] = a.is_inn_invariant;
  j["is_normal"] = a.is_normal;
  if (!a.is_subnarhoop) j["subnarhoop_witness"] = a.subnarhoop_witness;
  if (!a.is_upward_closed) j["upward_witness"] = a.upward_witness;
  if (!a.is_inn_invariant) j["inn_witness"] = a.inn_witness;
  return j;
}

}  // namespace narhoop
