#include "narhoop/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "narhoop/errors.hpp"

namespace narhoop {

FiniteMagma relabel(const FiniteMagma& m, std::span<const Element> perm) {
  const std::size_t n = m.size();
  if (perm.size() != n) throw PreconditionError("relabeling has the wrong length");
  std::vector<bool> seen(n, false);
  for (Element p : perm) {
    if (p >= n || seen[p]) throw PreconditionError("relabeling is not a permutation");
    seen[p] = true;
  }
  std::vector<Element> mul(n * n), div(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      mul[perm[x] * n + perm[y]] = perm[m.mul(x, y)];
      div[perm[x] * n + perm[y]] = perm[m.div(x, y)];
    }
  }
  return FiniteMagma(n, std::move(mul), std::move(div));
}

CanonicalForm canonicalize(const MagmaView& m) {
  const std::size_t n = m.n;
  const std::size_t cells = n * n;
  std::vector<Element> sigma(n), inverse(n);
  std::iota(sigma.begin(), sigma.end(), Element{0});

  std::vector<Element> best(2 * cells), candidate(2 * cells);
  std::copy(m.mul_table.begin(), m.mul_table.end(), best.begin());
  std::copy(m.div_table.begin(), m.div_table.end(), best.begin() + cells);

  // Position k of the relabeled key holds sigma(op[inv a][inv b]) for (a,b) = (k / n, k % n).
  do {
    for (std::size_t x = 0; x < n; ++x) inverse[sigma[x]] = Element(x);
    bool smaller = false;
    bool abandoned = false;
    for (std::size_t k = 0; k < 2 * cells; ++k) {
      const std::size_t cell = k % cells;
      const std::size_t a = inverse[cell / n];
      const std::size_t b = inverse[cell % n];
      const Element v = sigma[k < cells ? m.mul(a, b) : m.div(a, b)];
      candidate[k] = v;
      if (!smaller) {
        if (v > best[k]) {
          abandoned = true;
          break;
        }
        if (v < best[k]) smaller = true;
      }
    }
    if (!abandoned && smaller) best.swap(candidate);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<Element> mul(best.begin(), best.begin() + cells);
  std::vector<Element> div(best.begin() + cells, best.end());
  return CanonicalForm{FiniteMagma(n, std::move(mul), std::move(div))};
}

CanonicalForm canonicalize(const FiniteMagma& m) { return canonicalize(m.view()); }

bool isomorphic(const FiniteMagma& a, const FiniteMagma& b) {
  return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

}  // namespace narhoop
