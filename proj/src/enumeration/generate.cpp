#include <algorithm>
#include <array>
#include <optional>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "narhoop/canonical.hpp"
#include "narhoop/enumerate.hpp"
#include "narhoop/errors.hpp"

namespace narhoop {

namespace {

constexpr std::size_t kFullSpaceMaxSize = 3;

using ClassSets = std::vector<std::set<FiniteMagma>>;

/// Tests one complete candidate against every requested class.
struct Filter {
  std::span<const ModelClass> classes;

  void operator()(std::size_t n, std::span<const Element> mul, std::span<const Element> div, ClassSets& out,
                  SearchStats& stats) const {
    ++stats.candidates;
    const MagmaView view{n, mul, div};
    bool canonical_done = false;
    std::optional<FiniteMagma> canonical;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (!is_member(view, classes[i])) continue;
      ++stats.accepted;
      if (!canonical_done) {
        canonical = canonicalize(view).magma;
        canonical_done = true;
      }
      out[i].insert(*canonical);
    }
  }
};

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Full table space, split by the first row of div.
void scan_full_prefix(std::size_t n, std::size_t prefix, const Filter& filter, ClassSets& out, SearchStats& stats) {
  const std::size_t cells = n * n;
  std::vector<Element> mul(cells, 0), div(cells, 0);
  for (std::size_t i = 0; i < n; ++i) {
    div[n - 1 - i] = static_cast<Element>(prefix % n);
    prefix /= n;
  }
  std::vector<Element*> digits;
  for (std::size_t i = n; i < cells; ++i) digits.push_back(&div[i]);
  for (std::size_t i = 0; i < cells; ++i) digits.push_back(&mul[i]);

  while (true) {
    filter(n, mul, div, out, stats);
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(digits.size()) - 1;
    while (k >= 0) {
      if (++*digits[k] < n) break;
      *digits[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

using Relation = std::vector<std::uint8_t>;  // n*n, r[x*n+y] means x ≤ y

std::vector<Relation> all_partial_orders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  std::vector<Relation> out;
  Relation r(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) r[x * n + x] = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pairs.size()) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            if (r[x * n + y] && r[y * n + z] && !r[x * n + z]) return;
      out.push_back(r);
      return;
    }
    auto [x, y] = pairs[k];
    for (int state = 0; state < 3; ++state) {
      r[x * n + y] = state == 1;
      r[y * n + x] = state == 2;
      rec(k + 1);
    }
    r[x * n + y] = r[y * n + x] = 0;
  };
  rec(0);
  return out;
}

struct ResiduatedPair {
  std::vector<Element> f;  // x ↦ x·y
  std::vector<Element> g;  // z ↦ z/y, the unique map with f(x) ≤ z ⟺ x ≤ g(z)
};

std::vector<ResiduatedPair> residuated_maps(std::size_t n, const Relation& le) {
  std::vector<ResiduatedPair> out;
  std::vector<Element> f(n, 0);
  const std::size_t total = ipow(n, n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t x = 0; x < n; ++x) {
      f[x] = static_cast<Element>(c % n);
      c /= n;
    }
    std::vector<Element> g(n);
    bool ok = true;
    for (std::size_t z = 0; z < n && ok; ++z) {
      bool found = false;
      for (std::size_t top = 0; top < n && !found; ++top) {
        bool matches = true;
        for (std::size_t x = 0; x < n && matches; ++x)
          matches = (le[f[x] * n + z] != 0) == (le[x * n + top] != 0);
        if (matches) {
          g[z] = static_cast<Element>(top);
          found = true;
        }
      }
      ok = found;
    }
    if (ok) out.push_back({f, g});
  }
  return out;
}

// Every rres_n model has a partial order ≤ under which each right
// translation x ↦ xy is residuated with residual z ↦ z/y, so scanning
// orders × residuated columns covers the class.
void scan_order_first(std::size_t n, const Relation& le, const Filter& filter, ClassSets& out, SearchStats& stats) {
  const std::vector<ResiduatedPair> maps = residuated_maps(n, le);
  if (maps.empty()) return;
  std::vector<std::size_t> choice(n, 0);
  std::vector<Element> mul(n * n), div(n * n);
  while (true) {
    for (std::size_t y = 0; y < n; ++y) {
      const ResiduatedPair& p = maps[choice[y]];
      for (std::size_t x = 0; x < n; ++x) {
        mul[x * n + y] = p.f[x];
        div[x * n + y] = p.g[x];
      }
    }
    filter(n, mul, div, out, stats);
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(n) - 1;
    while (k >= 0) {
      if (++choice[k] < maps.size()) break;
      choice[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

std::vector<std::vector<Element>> all_permutations(std::size_t n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// (x/y)y = x and (xy)/y = x make each mul column a bijection with the div
// column as its inverse.
void scan_bijective_columns(std::size_t n, std::size_t first, const std::vector<std::vector<Element>>& perms,
                            const Filter& filter, ClassSets& out, SearchStats& stats) {
  std::vector<std::size_t> choice(n, 0);
  choice[0] = first;
  std::vector<Element> mul(n * n), div(n * n);
  while (true) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& p = perms[choice[y]];
      for (std::size_t x = 0; x < n; ++x) {
        mul[x * n + y] = p[x];
        div[p[x] * n + y] = static_cast<Element>(x);
      }
    }
    filter(n, mul, div, out, stats);
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(n) - 1;
    while (k >= 1) {
      if (++choice[k] < perms.size()) break;
      choice[k] = 0;
      --k;
    }
    if (k < 1) break;
  }
}

enum class Space { full, order_first, bijective_columns };

Space space_for(std::size_t size, ModelClass c) {
  if (size <= kFullSpaceMaxSize) return Space::full;
  if (size == 4 && c == ModelClass::rres_n) return Space::order_first;
  if (size == 4 && c == ModelClass::right_quasigroup) return Space::bijective_columns;
  throw UsageError("generate_and_filter is infeasible for class " + std::string(model_class_name(c)) +
                   " at size " + std::to_string(size));
}

// Runs one space for the given classes, splitting the outermost loop over
// `width` workers (width 1 runs inline).
void run_space(Space space, std::size_t n, std::span<const ModelClass> classes, int width, ClassSets& out,
               SearchStats& stats) {
  const Filter filter{classes};
  std::vector<Relation> orders;
  std::vector<std::vector<Element>> perms;
  std::size_t units = 0;
  switch (space) {
    case Space::full: units = ipow(n, n); break;
    case Space::order_first:
      orders = all_partial_orders(n);
      units = orders.size();
      break;
    case Space::bijective_columns:
      perms = all_permutations(n);
      units = perms.size();
      break;
  }
  auto run_unit = [&](std::size_t u, ClassSets& sets, SearchStats& s) {
    switch (space) {
      case Space::full: scan_full_prefix(n, u, filter, sets, s); break;
      case Space::order_first: scan_order_first(n, orders[u], filter, sets, s); break;
      case Space::bijective_columns: scan_bijective_columns(n, u, perms, filter, sets, s); break;
    }
  };

  if (width <= 1) {
    for (std::size_t u = 0; u < units; ++u) run_unit(u, out, stats);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel num_threads(width)
#endif
  {
    ClassSets local(classes.size());
    SearchStats mine;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
    for (std::ptrdiff_t u = 0; u < static_cast<std::ptrdiff_t>(units); ++u) run_unit(u, local, mine);
#ifdef _OPENMP
#pragma omp critical(narhoop_generate_merge)
#endif
    {
      for (std::size_t i = 0; i < classes.size(); ++i) out[i].merge(local[i]);
      stats.candidates += mine.candidates;
      stats.accepted += mine.accepted;
    }
  }
}

std::vector<std::vector<FiniteMagma>> generate_and_filter_impl(std::size_t size, std::span<const ModelClass> classes,
                                                               int width, SearchStats* stats) {
  if (size == 0) throw UsageError("size must be at least 1");
  for (ModelClass c : classes) space_for(size, c);

  ClassSets sets(classes.size());
  SearchStats total;
  if (size <= kFullSpaceMaxSize) {
    run_space(Space::full, size, classes, width, sets, total);
  } else {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ClassSets one(1);
      run_space(space_for(size, classes[i]), size, classes.subspan(i, 1), width, one, total);
      sets[i] = std::move(one[0]);
    }
  }
  if (stats) *stats = total;
  std::vector<std::vector<FiniteMagma>> result;
  for (auto& s : sets) result.emplace_back(s.begin(), s.end());
  return result;
}

}  // namespace

bool generate_and_filter_feasible(std::size_t size, ModelClass c) {
  if (size == 0) return false;
  if (size <= kFullSpaceMaxSize) return true;
  return size == 4 && (c == ModelClass::rres_n || c == ModelClass::right_quasigroup);
}

std::vector<std::vector<FiniteMagma>> generate_and_filter_serial(std::size_t size, std::span<const ModelClass> classes,
                                                                 SearchStats* stats) {
  return generate_and_filter_impl(size, classes, 1, stats);
}

std::vector<std::vector<FiniteMagma>> generate_and_filter_parallel(std::size_t size,
                                                                   std::span<const ModelClass> classes, int width,
                                                                   SearchStats* stats) {
  return generate_and_filter_impl(size, classes, width < 1 ? 1 : width, stats);
}

}  // namespace narhoop
