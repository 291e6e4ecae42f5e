#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace svc {

// Position of a tree node: the root has depth 0; below it, depth counts path
// bits b1..b_depth. For c-ary trees each level contributes log2(c) bits.
struct NodePath {
  uint8_t depth = 0;
  uint64_t bits = 0;  // path bits as a big-endian integer, b1 most significant

  static NodePath root() { return {}; }

  NodePath child(unsigned bit) const {
    return {uint8_t(depth + 1), (bits << 1) | (bit & 1)};
  }
  NodePath parent() const {
    return depth == 0 ? NodePath{} : NodePath{uint8_t(depth - 1), bits >> 1};
  }
  // Append one c-ary digit occupying `digit_bits` path bits.
  NodePath child_digit(uint64_t digit, unsigned digit_bits) const {
    return {uint8_t(depth + digit_bits), (bits << digit_bits) | digit};
  }

  bool operator==(const NodePath& o) const {
    return depth == o.depth && bits == o.bits;
  }
  // Canonical total order: depth ascending, then path bits ascending.
  bool operator<(const NodePath& o) const {
    if (depth != o.depth) return depth < o.depth;
    return bits < o.bits;
  }
};

struct UpdateEntry {
  NodePath path;
  std::vector<uint8_t> value;
};

enum class BackendId : uint8_t {
  merkle = 1,
  kzg = 2,
  amt = 3,
  lattice = 4,
  verkle = 5,
};

// Global broadcast payload: the new values of the republished tree nodes,
// in canonical order. Wire format: magic "SVCUPD01", u8 backend id, u8 tree
// height, LE u32 entry count, then per entry u8 depth, ceil(depth/8) path
// bytes (bits packed MSB-first), LE u16 value length, value bytes.
struct UpdateInfo {
  BackendId backend = BackendId::merkle;
  uint8_t height = 0;
  std::vector<UpdateEntry> entries;

  void sort_canonical();
  // Binary search; nullptr when the path is absent (meaning: unchanged node).
  const std::vector<uint8_t>* find(const NodePath& p) const;

  std::vector<uint8_t> encode() const;
  // Rejects bad magic, unknown backend, unsorted or duplicate entries,
  // truncation, and trailing bytes.
  static std::optional<UpdateInfo> decode(const std::vector<uint8_t>& bytes);

  size_t byte_size() const { return encode().size(); }
};

}  // namespace svc
