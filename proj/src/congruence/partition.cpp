#include <algorithm>
#include <numeric>

#include "narhoop/congruence.hpp"
#include "narhoop/errors.hpp"

namespace narhoop {

Partition::Partition(const std::vector<std::size_t>& block_of) {
  const std::size_t n = block_of.size();
  if (n == 0 || n > kMaxCarrier) throw PreconditionError("partition carrier must have 1..255 elements");
  // Relabel so block ids follow first occurrence.
  std::vector<std::size_t> remap(n, n);
  block_of_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t id = block_of[x];
    if (id >= n) throw PreconditionError("partition block id out of range");
    if (remap[id] == n) {
      remap[id] = blocks_.size();
      blocks_.emplace_back();
    }
    block_of_[x] = remap[id];
    blocks_[remap[id]].push_back(static_cast<Element>(x));
  }
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return Partition(ids);
}

Partition Partition::full(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

Partition Partition::from_blocks(std::size_t n, const std::vector<ElementSet>& blocks) {
  std::vector<std::size_t> ids(n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw PreconditionError("empty block");
    for (Element x : blocks[b]) {
      if (x >= n) throw PreconditionError("block member outside the carrier");
      if (ids[x] != n) throw PreconditionError("element " + std::to_string(x) + " lies in two blocks");
      ids[x] = b;
    }
  }
  if (std::find(ids.begin(), ids.end(), n) != ids.end())
    throw PreconditionError("blocks do not cover the carrier");
  return Partition(ids);
}

}  // namespace narhoop
