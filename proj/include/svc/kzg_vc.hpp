#pragma once

#include <cstdint>
#include <vector>

#include "svc/delta.hpp"
#include "svc/srs.hpp"
#include "svc/update_info.hpp"

namespace svc::kzg {

// Commitments to the Lagrange basis polynomials over {0..n-1} plus the
// matrix of their opening proofs at every domain point. The quadratic proof
// matrix is materialized only for n <= 1024; above that, cells are computed
// on demand.
struct LagrangeTable {
  uint32_t n = 0;
  std::vector<G1Aff> commitments;          // [L_i(X)]
  std::vector<std::vector<G1Aff>> proofs;  // proofs[i][j] = [(L_i - L_i(j))/(X-j)]
  bool materialized = false;
};

struct Setup {
  Srs srs;
  LagrangeTable table;
};

// aux is the plain message vector; the commitment is the Lagrange-basis
// multi-scalar multiplication of it.
struct State {
  G1Aff commitment;
  std::vector<Fr> messages;
};

using Delta = ScalarDelta;
using UpdateBatch = ScalarBatch;

struct UpdateOutcome {
  State state;
  UpdateInfo info;      // always empty for this backend
  uint64_t g1_exps = 0; // exactly one per batch entry
};

struct ProofUpdateOutcome {
  G1Aff proof;
  uint64_t g1_exps = 0; // at most one per batch entry
};

Setup keygen(uint32_t n, uint64_t seed);

// Exposed for the equivalence test: builds the table from an existing srs,
// taking the secret-evaluation fast path when srs.tau is present and the
// polynomial MSM path otherwise.
LagrangeTable build_table(const Srs& srs, uint32_t n);

State commit(const Setup& setup, const std::vector<Fr>& messages);
G1Aff open(const Setup& setup, const State& state, uint64_t index);
bool verify(const Setup& setup, const G1Aff& commitment, const Fr& message,
            uint64_t index, const G1Aff& proof);

UpdateOutcome update(const Setup& setup, const State& state,
                     const UpdateBatch& batch);
ProofUpdateOutcome proof_update(const Setup& setup, const G1Aff& proof,
                                uint64_t index, const UpdateBatch& batch);

}  // namespace svc::kzg
