#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "svc/sha256.hpp"
#include "svc/update_info.hpp"

namespace svc::merkle {

// Binary hash tree over N = 2^h messages. levels[d] holds the 2^d node
// hashes at depth d (levels[0][0] is the root, levels[h] the leaf hashes).
struct Tree {
  uint32_t height = 0;
  std::vector<std::vector<Hash32>> levels;
  std::vector<std::vector<uint8_t>> messages;

  uint64_t leaf_count() const { return uint64_t(1) << height; }
  const Hash32& root() const { return levels[0][0]; }
  const Hash32& node(const NodePath& p) const { return levels[p.depth][p.bits]; }
};

// Sibling hashes along the path, ordered from depth 1 down to depth h.
struct Proof {
  uint64_t index = 0;
  std::vector<Hash32> siblings;
};

struct BatchEntry {
  uint64_t index = 0;
  std::vector<uint8_t> message;
};
using UpdateBatch = std::vector<BatchEntry>;

// Throws std::invalid_argument unless the message count is a power of two.
std::pair<Hash32, Tree> commit(const std::vector<std::vector<uint8_t>>& messages);

// Throws std::out_of_range on a bad index.
Proof open(const Tree& tree, uint64_t index);

bool verify(const Hash32& root, const std::vector<uint8_t>& message,
            uint64_t index, const Proof& proof);

// Applies the batch and republishes every node hash that changed, root and
// leaf-hash nodes included. Throws std::invalid_argument on duplicate or
// out-of-range indices.
struct UpdateResult {
  Hash32 new_root;
  UpdateInfo info;
  Tree new_tree;
};
UpdateResult update(const Tree& tree, const UpdateBatch& batch);

// Swaps in the republished siblings (binary search per sibling); paths
// absent from the info are unchanged nodes.
Proof proof_update(const Proof& proof, const UpdateInfo& info);

}  // namespace svc::merkle
