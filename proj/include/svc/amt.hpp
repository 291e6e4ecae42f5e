#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svc/delta.hpp"
#include "svc/msm.hpp"
#include "svc/srs.hpp"
#include "svc/update_info.hpp"

namespace svc::amt {

// Half-open leaf interval [lo, hi) covered by the node.
std::pair<uint64_t, uint64_t> range(const NodePath& p, uint32_t height);

// Authenticated multipoint evaluation tree: every node holds the commitment
// to the quotient of its parent's remainder by the node's vanishing
// polynomial; the root quotient is identically zero, so the root node is
// the group identity.
struct Tree {
  uint32_t height = 0;
  std::vector<std::vector<G1Aff>> nodes;  // nodes[d][idx], d = 0..height
  G1Aff vc;                               // commitment to the interpolant
  std::vector<Fr> messages;

  const G1Aff& node(const NodePath& p) const { return nodes[p.depth][p.bits]; }
};

// Path nodes from the root down to the leaf level: height+1 elements.
struct Proof {
  uint32_t n = 0;
  uint64_t index = 0;
  std::vector<G1Aff> path;
};

// Public parameters: the sparse trees of the Lagrange basis polynomials
// (at most 2h+1 non-identity nodes each) and the vanishing-polynomial
// commitments in G2. Both are generated lazily per index/path; generation
// needs the secret evaluation point, so the setup must retain it (the
// two-element G2 power list in the reference string cannot honestly commit
// higher-degree vanishing polynomials).
class Params {
 public:
  Params(Srs srs, uint32_t n);  // throws if srs.tau is absent or n invalid

  uint32_t n() const { return n_; }
  uint32_t height() const { return height_; }
  const Srs& srs() const { return srs_; }

  // Sparse per-basis node list, sorted canonically. Paths absent from the
  // list hold the identity.
  const std::vector<std::pair<NodePath, G1Aff>>& basis_nodes(uint64_t i) const;
  const G1Aff* basis_node(uint64_t i, const NodePath& p) const;

  G2Aff vanishing_g2(const NodePath& p) const;

  // Commitments [L_i] to the Lagrange basis (root-level remainders).
  G1Aff basis_commitment(uint64_t i) const;

  // Secret-evaluation helpers shared with the tree builder.
  Fr remainder_at_secret(const std::vector<Fr>& messages, uint64_t lo,
                         uint64_t hi) const;
  Fr unit_remainder_at_secret(uint64_t i, uint64_t lo, uint64_t hi) const;
  Fr vanishing_at_secret(uint64_t lo, uint64_t hi) const;
  G1 fixed_base_mul(const Fr& s) const { return gtable_.mul(s); }

 private:
  friend std::optional<Params> load_params(const std::string& path);
  Params() = default;
  void init_tables();

  Srs srs_;
  uint32_t n_ = 0, height_ = 0;
  bool loaded_ = false;  // file-backed params carry no secrets
  FixedBaseTable gtable_{G1Aff::identity()};
  std::vector<Fr> prefix_, prefix_inv_, diff_inv_, fact_inv_;
  mutable std::vector<std::optional<std::vector<std::pair<NodePath, G1Aff>>>> basis_;
  mutable std::map<std::pair<uint8_t, uint64_t>, G2Aff> vcache_;
};

// Builds the full tree. Uses the secret-evaluation fast path when srs.tau
// is present and recursive polynomial division otherwise.
Tree build(const std::vector<Fr>& messages, const Srs& srs, const Params& params);

Proof open(const Tree& tree, uint64_t index);

// e(C / g^m, g2) == prod_j e(u_j, [V_path_j]) over the path.
bool verify(const G1Aff& vc, const Fr& message, const Proof& proof,
            const Params& params);

// (u^i at the node one step off the path prefix)^delta; depth 0 addresses
// the root and takes no child bit.
G1Aff partial_digest(const Params& params, uint64_t i, uint32_t depth,
                     std::optional<unsigned> child_bit, const Fr& delta);

struct NoInfoOutcome {
  Proof proof;
  uint64_t g1_exps = 0;  // bounded by batch-size * (height+1)
};

// Stateless proof refresh from the batch alone (no broadcast payload).
NoInfoOutcome proof_update_no_info(const Proof& proof, const ScalarBatch& batch,
                                   const Params& params);

// File format: magic "SVCAMT01", LE u32 N, per-basis sparse lists
// (LE u16 count, then per node u8 depth + packed path bits + 48-byte G1),
// then the 2N-1 vanishing commitments in canonical path order (96 bytes
// each). Saving materializes everything.
void save_params(const Params& params, const std::string& path);
std::optional<Params> load_params(const std::string& path);

}  // namespace svc::amt
