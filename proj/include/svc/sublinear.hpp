#pragma once

#include <cstdint>
#include <vector>

#include "svc/amt.hpp"
#include "svc/lattice_hmt.hpp"
#include "svc/update_info.hpp"

namespace svc::sub {

// Batch-size split: about k^nu published nodes versus k^(1-nu) refresh
// applications per proof. The threshold is the real value k^(1-nu).
double update_threshold(uint64_t k, double nu);

// Recursion termination: the watched subtree holds at most threshold-many
// updates. Compared with a relative tolerance so perfect-power thresholds
// behave exactly.
bool terminates(uint64_t count, uint64_t k, double nu);

struct Counters {
  uint64_t published_nodes = 0;
  uint64_t digest_applications = 0;  // per-proof refresh work
  uint64_t info_lookups = 0;         // per-proof published-value reads
};

// Updated leaves with index prefixed by the path.
uint64_t count_under(const NodePath& p, uint32_t height,
                     const std::vector<uint64_t>& sorted_indices);

// The broadcast set: walking from the root, a node is published (and its
// children visited) whenever the subtree under its locality-distance
// ancestor (the root for shallower nodes) holds more than threshold-many
// updates. Returned in canonical order: depth ascending, then path bits.
std::vector<NodePath> publish_set(uint32_t height, std::vector<uint64_t> indices,
                                  double nu, unsigned locality);

// Published-node and per-proof work bounds: at most
// 2^locality * (k^nu * height + 1) published nodes and
// threshold * (height + 1) digest applications.
bool counters_ok(const Counters& c, uint64_t k, double nu, uint32_t height,
                 unsigned locality);

// ---- hash-tree instantiation, locality 0 ------------------------------

struct LatDelta {
  uint64_t index;
  uint32_t old_value;
  uint32_t new_value;
};
using LatBatch = std::vector<LatDelta>;

struct LatticeOutcome {
  lat::Fq digest;
  lat::Tree tree;
  UpdateInfo info;
  Counters counters;  // published_nodes only
};

LatticeOutcome update_lattice(const lat::Tree& tree, const LatBatch& batch,
                              double nu, const lat::Params& params);

// Every proof node found in the broadcast is read from it; the rest are
// refreshed by per-leaf chain differences for the updates beneath them.
lat::Proof proof_update_lattice(const lat::Proof& proof, const LatBatch& batch,
                                const UpdateInfo& info, double nu,
                                const lat::Params& params,
                                Counters* counters = nullptr);

// ---- quotient-tree instantiation, locality 1 --------------------------

struct AmtOutcome {
  G1Aff vc;
  amt::Tree tree;
  UpdateInfo info;
  Counters counters;  // published_nodes only
  uint64_t g1_exps = 0;
};

AmtOutcome update_amt(const amt::Tree& tree, const ScalarBatch& batch, double nu,
                      const amt::Params& params);

amt::Proof proof_update_amt(const amt::Proof& proof, const ScalarBatch& batch,
                            const UpdateInfo& info, double nu,
                            const amt::Params& params,
                            Counters* counters = nullptr);

}  // namespace svc::sub
