// Independent test oracles. Nothing here calls the library's checkers; all
// terms go through the Term tree walker or plain loops over the tables.
#ifndef NARHOOP_TESTS_ORACLE_HPP
#define NARHOOP_TESTS_ORACLE_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "narhoop/axioms.hpp"
#include "narhoop/magma.hpp"
#include "narhoop/term.hpp"

namespace oracle {

using narhoop::Axiom;
using narhoop::Element;
using narhoop::FiniteMagma;
using narhoop::Term;

struct Vars {
  Term x = Term::var(0), y = Term::var(1), z = Term::var(2);
};

inline Element eval(const FiniteMagma& m, const Term& t, Element x, Element y = 0, Element z = 0) {
  const std::array<Element, 3> env{x, y, z};
  return t.eval(m.view(), env);
}

// a ≤ b read off (N): a = b⊓a, with ⊓ evaluated as a term.
inline bool le(const FiniteMagma& m, Element a, Element b) {
  const Vars v;
  return eval(m, narhoop::meet(v.y, v.x), a, b) == a;
}

template <typename F>
bool all3(std::size_t n, F&& f) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!f(Element(x), Element(y), Element(z))) return false;
  return true;
}

inline bool identity(const FiniteMagma& m, const Term& l, const Term& r) {
  return all3(m.size(), [&](Element x, Element y, Element z) { return eval(m, l, x, y, z) == eval(m, r, x, y, z); });
}

inline bool inequality(const FiniteMagma& m, const Term& l, const Term& r) {
  return all3(m.size(), [&](Element x, Element y, Element z) { return le(m, eval(m, l, x, y, z), eval(m, r, x, y, z)); });
}

/// Truth of one axiom, by term evaluation. U assumes the magma is unital.
inline bool holds(const FiniteMagma& m, Axiom a) {
  const Vars v;
  const Term &x = v.x, &y = v.y, &z = v.z;
  auto M = [](const Term& p, const Term& q) { return narhoop::meet(p, q); };
  const std::size_t n = m.size();
  switch (a) {
    case Axiom::RRES1: return inequality(m, M(x, y), x) && inequality(m, x, (x * y) / y);
    case Axiom::RRES2:
      return all3(n, [&](Element a, Element b, Element c) {
        return !le(m, a, b) || le(m, eval(m, x * z, a, b, c), eval(m, y * z, a, b, c));
      });
    case Axiom::RRES3:
      return all3(n, [&](Element a, Element b, Element c) {
        return !le(m, a, b) || le(m, eval(m, x / z, a, b, c), eval(m, y / z, a, b, c));
      });
    case Axiom::RRES:
      return all3(n, [&](Element a, Element b, Element c) {
        return le(m, eval(m, x * y, a, b), c) == le(m, a, eval(m, z / y, a, b, c));
      });
    case Axiom::N:
      return all3(n, [&](Element a, Element b, Element c) {
        const bool refl = le(m, a, a);
        const bool anti = !(le(m, a, b) && le(m, b, a)) || a == b;
        const bool trans = !(le(m, a, b) && le(m, b, c)) || le(m, a, c);
        return refl && anti && trans;
      });
    case Axiom::N_PRIME:
      return all3(n, [&](Element a, Element b, Element) {
        const bool two_sided = eval(m, M(x, y), a, b) == a && eval(m, M(y, x), a, b) == a;
        return le(m, a, b) == two_sided;
      });
    case Axiom::N1: return identity(m, M(M(x, y), x), M(x, y));
    case Axiom::N2: return inequality(m, x, (x * y) / y);
    case Axiom::N3: return inequality(m, M(x, y) * z, x * z);
    case Axiom::N4: return inequality(m, M(x, y) / z, x / z);
    case Axiom::N5: return identity(m, M(x, (x * y) / y), x);
    case Axiom::N6: return identity(m, M(x, y) / y, x / y);
    case Axiom::N7: return identity(m, M(M(x, y), y), M(x, y));
    case Axiom::N8: return identity(m, M(x, M(y, x)), M(x, y));
    case Axiom::N9: return identity(m, M(M(x, M(y, z)), z), M(x, M(y, z)));
    case Axiom::LN: return identity(m, M(M(x, y), z), M(M(x, z), y));
    case Axiom::U:
      return all3(n, [&](Element a, Element b, Element) {
        return le(m, a, b) == (eval(m, y / x, a, b) == eval(m, x / x, a));
      });
    case Axiom::UNITAL: return identity(m, x / x, y / y);
    case Axiom::RQ: return identity(m, M(x, y), x) && identity(m, (x * y) / y, x);
    case Axiom::RH1: return identity(m, (x / x) * y, y);
    case Axiom::RH2: return identity(m, x / (y * z), (x / z) / y);
    case Axiom::RH3:
      return all3(n, [&](Element a, Element b, Element) { return eval(m, M(x, y), a, b) != a || le(m, a, b); });
    case Axiom::COMM_SQCAP: return identity(m, M(x, y), M(y, x));
  }
  return false;
}

/// Uniform random tables.
inline FiniteMagma random_magma(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(0, int(n) - 1);
  std::vector<Element> mul(n * n), div(n * n);
  for (auto& e : mul) e = Element(d(rng));
  for (auto& e : div) e = Element(d(rng));
  return FiniteMagma(n, mul, div);
}

inline std::vector<Element> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<Element> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = Element(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Congruences by the textbook definition over all n^n labelings, kept as
/// normalized block-id vectors.
inline std::set<std::vector<std::size_t>> brute_congruences(const FiniteMagma& m) {
  const std::size_t n = m.size();
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> lab(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t a2 = 0; a2 < n && ok; ++a2) {
        if (lab[a] != lab[a2]) continue;
        for (std::size_t b = 0; b < n && ok; ++b)
          for (std::size_t b2 = 0; b2 < n && ok; ++b2) {
            if (lab[b] != lab[b2]) continue;
            ok = lab[m.mul(a, b)] == lab[m.mul(a2, b2)] && lab[m.div(a, b)] == lab[m.div(a2, b2)];
          }
      }
    if (ok) {
      std::map<std::size_t, std::size_t> first;
      std::vector<std::size_t> norm(n);
      for (std::size_t i = 0; i < n; ++i) norm[i] = first.emplace(lab[i], first.size()).first->second;
      out.insert(norm);
    }
    std::size_t i = 0;
    while (i < n && ++lab[i] == n) lab[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// The transformation semigroup generated by `gens`, by closing under
/// composition.
inline std::set<std::vector<Element>> semigroup_closure(const std::vector<std::vector<Element>>& gens) {
  std::set<std::vector<Element>> all(gens.begin(), gens.end());
  std::vector<std::vector<Element>> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        std::vector<Element> h(f.size());
        for (std::size_t z = 0; z < f.size(); ++z) h[z] = g[f[z]];
        if (all.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return all;
}

}  // namespace oracle

#endif  // NARHOOP_TESTS_ORACLE_HPP
