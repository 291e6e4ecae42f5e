#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svc/update_info.hpp"

namespace svc::lat {

// Short-integer-solution style hash family over Z_q. The compression
// matrix M has 2d columns; its left half L hashes up-shifted inputs and
// its right half R down-shifted ones, so a pair of digit vectors hashes
// as L*x + R*y.
struct Params {
  uint32_t k_dim = 0;
  uint32_t q = 0;
  uint32_t log_q = 0;          // ceil(log2 q)
  uint32_t d = 0;              // k_dim * log_q
  std::vector<uint32_t> m;     // row-major k_dim x 2d, entries mod q

  bool operator==(const Params&) const = default;
};

// Matrix entries drawn from the deterministic generator, row-major.
Params generate(uint64_t seed);

// File format: magic "SVCLAT01", LE u16 k_dim, LE u32 q, then the matrix
// row-major as LE u32s.
void save_params(const Params& params, const std::string& path);
std::optional<Params> load_params(const std::string& path);

using Digits = std::vector<uint32_t>;  // length d, entries mod q
using Fq = std::vector<uint32_t>;      // length k_dim

// Radix-2 digit expansion of a residue vector, least significant digit
// first within each block.
Digits decompose(const Params& params, const Fq& v);

// Positional re-weighting per block; linear, and a left inverse of
// decompose modulo q.
Fq g_inverse(const Params& params, const Digits& digits);

// Message encoding: the scalar sits in the first residue slot.
Digits encode_message(const Params& params, uint32_t msg);

// f(m) = L * decompose(encoded message).
Fq hash_leaf(const Params& params, uint32_t msg);

// f~(x, y) = L*x + R*y.
Fq hash_pair(const Params& params, const Digits& x, const Digits& y);

// Per-leaf hash chain h_{i,j}: start from decompose(f(m)) at the leaf and
// apply one decompose-of-half-matrix factor per level walked up, choosing
// the half by which child the path enters each level through. Exactly
// height - j factor applications; the optional counter reports them.
Digits chain(const Params& params, uint32_t height, uint64_t index, uint32_t j,
             uint32_t msg, uint64_t* factor_steps = nullptr);

// Every node is the entrywise sum of the chains of the leaves beneath it;
// the tree stores all of them.
struct Tree {
  uint32_t height = 0;
  std::vector<std::vector<Digits>> levels;  // levels[d][idx], d = 0..height
  std::vector<uint32_t> messages;

  uint64_t leaf_count() const { return uint64_t(1) << height; }
  const Digits& node(const NodePath& p) const { return levels[p.depth][p.bits]; }
  Digits& node(const NodePath& p) { return levels[p.depth][p.bits]; }
};

// Both children of every node along the path, root children first.
struct Proof {
  uint32_t n = 0;
  uint64_t index = 0;
  std::vector<std::array<Digits, 2>> pairs;
};

struct CommitResult {
  Fq digest;  // g_inverse of the root node
  Tree tree;
};

CommitResult commit(const std::vector<uint32_t>& messages, const Params& params);

Proof open(const Tree& tree, uint64_t index);

// Chain check: g_inverse of each on-path node equals the pair hash of its
// children, the bottom one equals the leaf hash, and the top pair hashes
// to the digest itself.
bool verify(const Fq& digest, uint32_t msg, const Proof& proof,
            const Params& params);

// u' = u + chain(new) - chain(old), entrywise mod q; exact against a
// rebuild because nodes are chain sums.
Digits node_update(const Params& params, const Digits& node, uint32_t height,
                   uint64_t index, uint32_t j, uint32_t old_msg,
                   uint32_t new_msg);

}  // namespace svc::lat
