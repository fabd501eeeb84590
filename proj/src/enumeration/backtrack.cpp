#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "narhoop/canonical.hpp"
#include "narhoop/enumerate.hpp"
#include "narhoop/errors.hpp"
#include "partial.hpp"

namespace narhoop {

namespace {

using detail::PartialTables;
using detail::Tri;

// Constraint instance packed as id << 24 | x << 16 | y << 8 | z.
using Instance = std::uint32_t;
using Domains = std::array<std::uint16_t, 3 * detail::kMaxCells>;

constexpr Instance pack(std::uint8_t id, int x, int y, int z) {
  return static_cast<Instance>(id) << 24 | static_cast<Instance>(x) << 16 | static_cast<Instance>(y) << 8 |
         static_cast<Instance>(z);
}

Tri evaluate(const PartialTables& t, Instance i) {
  t.blocked = -1;
  return detail::partial_constraint(t, static_cast<std::uint8_t>(i >> 24), (i >> 16) & 0xff, (i >> 8) & 0xff,
                                    i & 0xff);
}

struct Node {
  PartialTables tables;
  std::uint32_t mentioned;
  std::vector<Instance> pending;
};

// Outcome of filtering one node: dead, complete, or a cell to branch on.
struct Expansion {
  bool dead = false;
  bool complete = false;
  int cell = -1;
  std::uint16_t values = 0;
  std::uint32_t mentioned = 0;
  std::vector<Instance> pending;
};

class BacktrackSearch {
 public:
  BacktrackSearch(std::size_t size, ModelClass c) : n_(static_cast<int>(size)), cells_(3 * n_ * n_), class_(c) {
    for (const detail::Constraint& k : detail::pruning_constraints(class_axioms(c))) {
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < (k.arity >= 2 ? n_ : 1); ++y)
          for (int z = 0; z < (k.arity >= 3 ? n_ : 1); ++z) all_instances_.push_back(pack(k.id, x, y, z));
    }
    // Tie-break rank: meet cells, then div, then mul; within a table by the
    // largest index involved, so low elements are settled first.
    std::vector<int> order(cells_);
    for (int c = 0; c < cells_; ++c) order[c] = c;
    auto key = [&](int c) {
      const int table = c / (n_ * n_);
      const int local = c % (n_ * n_);
      const int a = local / n_, b = local % n_;
      return std::make_tuple(2 - table, std::max(a, b), a, b);
    };
    std::sort(order.begin(), order.end(), [&](int l, int r) { return key(l) < key(r); });
    rank_.assign(cells_, 0);
    for (int i = 0; i < cells_; ++i) rank_[order[i]] = i;
  }

  Node root() const { return Node{PartialTables(n_), 0u, all_instances_}; }

  // Re-evaluates the instances still undecided at the parent. A value is
  // removed from a cell's domain when assigning it falsifies some instance
  // whose first unassigned lookup is that cell.
  Expansion expand(const PartialTables& t, std::uint32_t mentioned, const std::vector<Instance>& pending,
                   SearchStats& stats) const {
    ++stats.nodes;
    Expansion e;
    const std::uint16_t full = static_cast<std::uint16_t>((1u << n_) - 1);
    Domains dom{};
    std::array<bool, 3 * detail::kMaxCells> demanded{};
    for (int c = 0; c < cells_; ++c) dom[c] = t.cells[c] < 0 ? full : 0;

    PartialTables& scratch = const_cast<PartialTables&>(t);
    e.pending.reserve(pending.size());
    for (Instance inst : pending) {
      const Tri r = evaluate(t, inst);
      if (r == Tri::no) {
        e.dead = true;
        return e;
      }
      if (r == Tri::yes) continue;
      e.pending.push_back(inst);
      const int c = t.blocked;
      demanded[c] = true;
      for (int v = 0; v < n_; ++v) {
        if (!(dom[c] & (1u << v))) continue;
        scratch.cells[c] = static_cast<std::int8_t>(v);
        if (evaluate(t, inst) == Tri::no) dom[c] &= static_cast<std::uint16_t>(~(1u << v));
      }
      scratch.cells[c] = detail::kUnassigned;
      if (dom[c] == 0) {
        e.dead = true;
        return e;
      }
    }

    // Prefer cells whose indices are already mentioned, so new elements
    // enter one at a time and the least-number restriction stays effective;
    // then smallest domain, then cells some pending instance is blocked on.
    auto outside = [&](int c) {
      const int local = c % (n_ * n_);
      const std::uint32_t indices = (1u << (local / n_)) | (1u << (local % n_));
      return (indices & ~mentioned) != 0;
    };
    int best = -1;
    auto better = [&](int c) {
      if (best < 0) return true;
      if (outside(c) != outside(best)) return !outside(c);
      const int pc = std::popcount(dom[c]), pb = std::popcount(dom[best]);
      if (pc != pb) return pc < pb;
      if (demanded[c] != demanded[best]) return demanded[c];
      return rank_[c] < rank_[best];
    };
    for (int c = 0; c < cells_; ++c)
      if (t.cells[c] < 0 && better(c)) best = c;
    if (best < 0) {
      e.complete = true;
      return e;
    }

    const int local = best % (n_ * n_);
    const std::uint32_t indices = (1u << (local / n_)) | (1u << (local % n_));
    const std::uint32_t known = mentioned | indices;
    // Elements outside `known` are interchangeable under automorphisms that
    // fix the assignment, so only the least of them is tried.
    std::uint16_t values = static_cast<std::uint16_t>(dom[best] & known);
    const std::uint16_t fresh = static_cast<std::uint16_t>(dom[best] & ~known);
    if (fresh) values |= static_cast<std::uint16_t>(fresh & -fresh);
    e.cell = best;
    e.values = values;
    e.mentioned = known;
    return e;
  }

  void accept_leaf(const PartialTables& t, std::set<FiniteMagma>& out, SearchStats& stats) const {
    const std::size_t cells = static_cast<std::size_t>(n_) * n_;
    std::vector<Element> mul(cells), div(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      mul[i] = static_cast<Element>(t.cells[i]);
      div[i] = static_cast<Element>(t.cells[cells + i]);
    }
    ++stats.candidates;
    const MagmaView view{static_cast<std::size_t>(n_), mul, div};
    if (!is_member(view, class_)) return;
    ++stats.accepted;
    out.insert(canonicalize(view).magma);
  }

  void dfs(PartialTables& t, std::uint32_t mentioned, const std::vector<Instance>& pending,
           std::set<FiniteMagma>& out, SearchStats& stats) const {
    const Expansion e = expand(t, mentioned, pending, stats);
    if (e.dead) return;
    if (e.complete) {
      accept_leaf(t, out, stats);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (!(e.values & (1u << v))) continue;
      t.cells[e.cell] = static_cast<std::int8_t>(v);
      dfs(t, e.mentioned | (1u << v), e.pending, out, stats);
    }
    t.cells[e.cell] = detail::kUnassigned;
  }

  /// Expands breadth-first until at least `target` open nodes exist. Open
  /// nodes carry their parent's pending list and are re-expanded by dfs.
  std::vector<Node> frontier(std::size_t target, std::set<FiniteMagma>& out, SearchStats& stats) const {
    std::vector<Node> level{root()};
    for (int depth = 0; depth < cells_ && !level.empty() && level.size() < target; ++depth) {
      std::vector<Node> next;
      for (Node& node : level) {
        const Expansion e = expand(node.tables, node.mentioned, node.pending, stats);
        if (e.dead) continue;
        if (e.complete) {
          accept_leaf(node.tables, out, stats);
          continue;
        }
        for (int v = 0; v < n_; ++v) {
          if (!(e.values & (1u << v))) continue;
          Node child{node.tables, e.mentioned | (1u << v), e.pending};
          child.tables.cells[e.cell] = static_cast<std::int8_t>(v);
          next.push_back(std::move(child));
        }
      }
      level = std::move(next);
    }
    return level;
  }

 private:
  int n_;
  int cells_;
  ModelClass class_;
  std::vector<Instance> all_instances_;
  std::vector<int> rank_;
};

void check_size(std::size_t size) {
  if (size == 0) throw UsageError("size must be at least 1");
  if (size > kMaxSearchSize)
    throw UsageError("backtracking supports sizes up to " + std::to_string(kMaxSearchSize));
}

}  // namespace

std::vector<FiniteMagma> backtrack_serial(std::size_t size, ModelClass c, SearchStats* stats) {
  check_size(size);
  BacktrackSearch search(size, c);
  SearchStats local;
  std::set<FiniteMagma> found;
  Node root = search.root();
  search.dfs(root.tables, root.mentioned, root.pending, found, local);
  if (stats) *stats = local;
  return {found.begin(), found.end()};
}

std::vector<FiniteMagma> backtrack_parallel(std::size_t size, ModelClass c, int width, SearchStats* stats) {
  check_size(size);
  if (width < 1) width = 1;
  BacktrackSearch search(size, c);
  SearchStats total;
  std::set<FiniteMagma> found;
  std::vector<Node> open = search.frontier(static_cast<std::size_t>(width) * 16, found, total);

#ifdef _OPENMP
#pragma omp parallel num_threads(width)
#endif
  {
    SearchStats mine;
    std::set<FiniteMagma> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(open.size()); ++i) {
      Node node = open[i];
      search.dfs(node.tables, node.mentioned, node.pending, local, mine);
    }
#ifdef _OPENMP
#pragma omp critical(narhoop_backtrack_merge)
#endif
    {
      found.merge(local);
      total.nodes += mine.nodes;
      total.candidates += mine.candidates;
      total.accepted += mine.accepted;
    }
  }
  if (stats) *stats = total;
  return {found.begin(), found.end()};
}

}  // namespace narhoop
