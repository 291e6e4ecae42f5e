#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "svc/delta.hpp"
#include "svc/kzg_vc.hpp"
#include "svc/srs.hpp"
#include "svc/update_info.hpp"

namespace svc::verkle {

// Digest maps: a group element hashes through its 48-byte compressed
// encoding, a scalar through its 32-byte big-endian encoding, both reduced
// into the scalar field.
Fr hash_point(const G1Aff& p);
Fr hash_scalar(const Fr& m);

// Degree-c tree with polynomial-committed inner nodes over domain
// {0..c-1}; the polynomial at a node interpolates the hashes of its
// children (commitments above the bottom level, messages at it).
struct Setup {
  Srs srs;
  kzg::LagrangeTable table;
  uint32_t c = 0;
  uint32_t digit_bits = 0;  // log2 c
};

// c must be a power of two in [2, 1024].
Setup keygen(uint32_t c, uint64_t seed);

struct Tree {
  uint32_t c = 0;
  uint32_t digit_bits = 0;
  uint32_t height = 0;  // leaf count = c^height, height >= 1
  std::vector<std::vector<G1Aff>> levels;  // levels[j]: c^j nodes, j < height
  std::vector<Fr> messages;

  uint64_t leaf_count() const { return messages.size(); }
  const G1Aff& node(uint32_t depth, uint64_t idx) const {
    return levels[depth][idx];
  }
};

struct CommitResult {
  Fr root_hash;  // the scheme's public commitment is the hashed root
  Tree tree;
};

CommitResult commit(const std::vector<Fr>& messages, const Setup& setup);

// Multiproof: inner path commitments below the root, the aggregated
// quotient commitment D, and its opening at the transcript point.
struct Proof {
  std::vector<G1Aff> path;  // depths 1..height-1
  G1Aff d;
  G1Aff pi;
};

// Per-user working state kept between updates: the per-level quotient
// proofs and every child of every path node (commitments above the bottom
// level, messages at it).
struct Context {
  uint64_t index = 0;
  std::vector<G1Aff> openings;               // height entries
  std::vector<std::vector<G1Aff>> siblings;  // depths 0..height-2
  std::vector<Fr> leaf_siblings;             // c messages of the bottom node
};

struct OpenResult {
  Proof proof;
  Context context;
};

OpenResult open(const Tree& tree, uint64_t index, const Setup& setup);

// Pairing check of the aggregated opening against the root commitment.
bool verify(const G1Aff& root, const Fr& message, uint64_t index,
            const Proof& proof, const Setup& setup);

// u8 height, then height-1 path commitments, D, and the opening.
std::vector<uint8_t> encode_proof(const Proof& proof);
std::optional<Proof> decode_proof(const std::vector<uint8_t>& bytes);

struct UpdateOutcome {
  Fr root_hash;
  Tree tree;
  UpdateInfo info;  // the full path union: commitments plus leaf values
  uint64_t g1_exps = 0;
};

UpdateOutcome update(const Tree& tree, const ScalarBatch& batch,
                     const Setup& setup);

struct ProofUpdateOutcome {
  Proof proof;
  Context context;
  uint64_t g1_exps = 0;  // bounded by (c+2)*height plus 2*height slack
};

// Stateless refresh: path commitments and changed sibling hashes are read
// from the broadcast, per-level proofs move by quotient-table multiples,
// and the aggregate is re-derived from the fresh transcript.
ProofUpdateOutcome proof_update(const Proof& proof, const Context& context,
                                uint64_t index, const UpdateInfo& info,
                                const Setup& setup);

}  // namespace svc::verkle
