#include "svc/merkle_vc.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace svc::merkle {

namespace {

Hash32 hash_pair(const Hash32& l, const Hash32& r) {
  Sha256 h;
  h.append(l);
  h.append(r);
  return h.finish();
}

Hash32 hash_message(const std::vector<uint8_t>& m) {
  return sha256(m.data(), m.size());
}

}  // namespace

std::pair<Hash32, Tree> commit(const std::vector<std::vector<uint8_t>>& messages) {
  size_t n = messages.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("message count must be a power of two");
  uint32_t h = 0;
  while ((size_t(1) << h) < n) h++;

  Tree t;
  t.height = h;
  t.messages = messages;
  t.levels.resize(h + 1);
  t.levels[h].resize(n);
  for (size_t i = 0; i < n; i++) t.levels[h][i] = hash_message(messages[i]);
  for (uint32_t d = h; d-- > 0;) {
    t.levels[d].resize(size_t(1) << d);
    for (size_t i = 0; i < t.levels[d].size(); i++)
      t.levels[d][i] = hash_pair(t.levels[d + 1][2 * i], t.levels[d + 1][2 * i + 1]);
  }
  return {t.root(), t};
}

Proof open(const Tree& tree, uint64_t index) {
  if (index >= tree.leaf_count()) throw std::out_of_range("leaf index out of range");
  Proof p;
  p.index = index;
  p.siblings.reserve(tree.height);
  // Sibling at depth j shares the first j-1 path bits and flips bit j.
  for (uint32_t j = 1; j <= tree.height; j++) {
    uint64_t prefix = index >> (tree.height - j);
    p.siblings.push_back(tree.levels[j][prefix ^ 1]);
  }
  return p;
}

bool verify(const Hash32& root, const std::vector<uint8_t>& message,
            uint64_t index, const Proof& proof) {
  uint32_t h = uint32_t(proof.siblings.size());
  if (h < 64 && index >= (uint64_t(1) << h)) return false;
  Hash32 cur = hash_message(message);
  for (uint32_t j = h; j >= 1; j--) {
    const Hash32& sib = proof.siblings[j - 1];
    uint64_t bit = (index >> (h - j)) & 1;
    cur = bit == 0 ? hash_pair(cur, sib) : hash_pair(sib, cur);
  }
  return cur == root;
}

UpdateResult update(const Tree& tree, const UpdateBatch& batch) {
  std::unordered_set<uint64_t> seen;
  for (const auto& e : batch) {
    if (e.index >= tree.leaf_count())
      throw std::invalid_argument("update index out of range");
    if (!seen.insert(e.index).second)
      throw std::invalid_argument("duplicate index in update batch");
  }

  UpdateResult r;
  r.new_tree = tree;
  uint32_t h = tree.height;
  for (const auto& e : batch) {
    r.new_tree.messages[e.index] = e.message;
    r.new_tree.levels[h][e.index] = hash_message(e.message);
  }

  std::vector<uint64_t> dirty(seen.begin(), seen.end());
  std::sort(dirty.begin(), dirty.end());
  r.info.backend = BackendId::merkle;
  r.info.height = uint8_t(h);
  for (uint32_t d = h;; d--) {
    for (uint64_t idx : dirty) {
      if (d < h)
        r.new_tree.levels[d][idx] = hash_pair(r.new_tree.levels[d + 1][2 * idx],
                                              r.new_tree.levels[d + 1][2 * idx + 1]);
      if (!(r.new_tree.levels[d][idx] == tree.levels[d][idx])) {
        UpdateEntry e;
        e.path = NodePath{uint8_t(d), idx};
        e.value.assign(r.new_tree.levels[d][idx].begin(),
                       r.new_tree.levels[d][idx].end());
        r.info.entries.push_back(std::move(e));
      }
    }
    if (d == 0) break;
    std::vector<uint64_t> up;
    up.reserve(dirty.size());
    for (uint64_t idx : dirty)
      if (up.empty() || up.back() != idx >> 1) up.push_back(idx >> 1);
    dirty = std::move(up);
  }
  r.info.sort_canonical();
  r.new_root = r.new_tree.root();
  return r;
}

Proof proof_update(const Proof& proof, const UpdateInfo& info) {
  Proof out = proof;
  uint32_t h = uint32_t(proof.siblings.size());
  for (uint32_t j = 1; j <= h; j++) {
    uint64_t prefix = proof.index >> (h - j);
    NodePath sib{uint8_t(j), prefix ^ 1};
    if (const auto* v = info.find(sib); v && v->size() == 32)
      std::copy(v->begin(), v->end(), out.siblings[j - 1].begin());
  }
  return out;
}

}  // namespace svc::merkle
