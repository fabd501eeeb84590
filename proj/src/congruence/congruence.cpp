#include <algorithm>
#include <numeric>
#include <set>

#include "narhoop/congruence.hpp"
#include "narhoop/errors.hpp"

namespace narhoop {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  Partition partition() {
    std::vector<std::size_t> ids(parent_.size());
    for (std::size_t x = 0; x < ids.size(); ++x) ids[x] = find(x);
    return Partition(ids);
  }

 private:
  std::vector<std::size_t> parent_;
};

Partition join(const Partition& a, const Partition& b) {
  UnionFind uf(a.size());
  for (const auto* p : {&a, &b})
    for (const auto& block : p->blocks())
      for (Element x : block) uf.unite(block.front(), x);
  return uf.partition();
}

bool respects(const FiniteMagma& m, const Partition& p) {
  const std::size_t n = m.size();
  // Changing one argument at a time within a block is enough.
  for (const auto& block : p.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) {
      const Element a = block.front(), b = block[i];
      for (std::size_t c = 0; c < n; ++c) {
        if (!p.related(m.mul(a, c), m.mul(b, c)) || !p.related(m.mul(c, a), m.mul(c, b))) return false;
        if (!p.related(m.div(a, c), m.div(b, c)) || !p.related(m.div(c, a), m.div(c, b))) return false;
      }
    }
  return true;
}

void sort_congruences(std::vector<CongruenceInfo>& cs) {
  std::sort(cs.begin(), cs.end(), [](const CongruenceInfo& a, const CongruenceInfo& b) {
    if (a.partition.block_count() != b.partition.block_count())
      return a.partition.block_count() > b.partition.block_count();
    return a.partition < b.partition;
  });
}

}  // namespace

CongruenceInfo analyze_partition(const FiniteMagma& m, const Partition& p) {
  if (p.size() != m.size()) throw PreconditionError("partition and magma sizes differ");
  CongruenceInfo info{p, respects(m, p), false, std::nullopt};
  const std::size_t unit_block = p.block_of(m.div(0, 0));
  info.is_unital = true;
  for (std::size_t x = 1; x < m.size(); ++x)
    if (p.block_of(m.div(x, x)) != unit_block) info.is_unital = false;
  if (info.is_unital) info.n_theta = p.blocks()[unit_block];
  return info;
}

CongruenceInfo principal_congruence(const FiniteMagma& m, Element a, Element b) {
  const std::size_t n = m.size();
  if (a >= n || b >= n) throw PreconditionError("principal_congruence: element outside the carrier");
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> work;
  auto merge = [&](Element x, Element y) {
    if (uf.unite(x, y)) work.emplace_back(x, y);
  };
  merge(a, b);
  // Every edge added to the union-find is pushed through all translations;
  // classes are connected by edges, so this reaches the fixpoint.
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (std::size_t c = 0; c < n; ++c) {
      merge(m.mul(x, c), m.mul(y, c));
      merge(m.mul(c, x), m.mul(c, y));
      merge(m.div(x, c), m.div(y, c));
      merge(m.div(c, x), m.div(c, y));
    }
  }
  CongruenceInfo info = analyze_partition(m, uf.partition());
  if (!info.is_congruence)
    throw InvariantViolation("pair closure produced a non-congruence on " + m.to_string());
  return info;
}

std::vector<CongruenceInfo> all_congruences(const FiniteMagma& m) {
  const std::size_t n = m.size();
  std::set<Partition> found{Partition::identity(n)};
  std::vector<Partition> principal;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Partition p = principal_congruence(m, static_cast<Element>(a), static_cast<Element>(b)).partition;
      if (found.insert(p).second) principal.push_back(std::move(p));
    }
  // Every congruence is a join of principal ones, so joining new members with
  // the principal list closes the set.
  std::vector<Partition> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& f : frontier)
      for (const auto& p : principal) {
        Partition j = join(f, p);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<CongruenceInfo> out;
  out.reserve(found.size());
  for (const auto& p : found) {
    CongruenceInfo info = analyze_partition(m, p);
    if (!info.is_congruence)
      throw InvariantViolation("join of congruences is not a congruence on " + m.to_string());
    out.push_back(std::move(info));
  }
  sort_congruences(out);
  return out;
}

std::vector<CongruenceInfo> congruences_by_partition_filter(const FiniteMagma& m) {
  const std::size_t n = m.size();
  if (n > 10) throw PreconditionError("partition filter supports carriers up to 10 elements");
  // Restricted growth strings: rgs[0]=0, rgs[i] <= 1 + max(rgs[0..i)).
  std::vector<std::size_t> rgs(n, 0), peak(n, 0);
  std::vector<CongruenceInfo> out;
  while (true) {
    CongruenceInfo info = analyze_partition(m, Partition(rgs));
    if (info.is_congruence) out.push_back(std::move(info));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > peak[i - 1]) --i;
    if (i == 0) break;
    // i is the last position that can still grow.
    ++rgs[i];
    peak[i] = std::max(peak[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      peak[j] = peak[i];
    }
  }
  sort_congruences(out);
  return out;
}

FiniteMagma quotient(const FiniteMagma& m, const CongruenceInfo& c) {
  if (c.partition.size() != m.size()) throw PreconditionError("partition and magma sizes differ");
  if (!respects(m, c.partition)) throw PreconditionError("quotient by a partition that is not a congruence");
  const auto& blocks = c.partition.blocks();
  const std::size_t k = blocks.size();
  std::vector<Element> mul(k * k), div(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Element x = blocks[i].front(), y = blocks[j].front();
      mul[i * k + j] = static_cast<Element>(c.partition.block_of(m.mul(x, y)));
      div[i * k + j] = static_cast<Element>(c.partition.block_of(m.div(x, y)));
    }
  return FiniteMagma(k, std::move(mul), std::move(div));
}

Json partition_to_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks()) blocks.push_back(b);
  return blocks;
}

Json congruence_to_json(const CongruenceInfo& c) {
  Json j;
  j["blocks"] = partition_to_json(c.partition);
  j["is_congruence"] = c.is_congruence;
  j["is_unital"] = c.is_unital;
  j["n_theta"] = c.n_theta ? Json(*c.n_theta) : Json(nullptr);
  return j;
}

}  // namespace narhoop
