#include "svc/kzg_vc.hpp"

#include <stdexcept>

#include "svc/msm.hpp"

namespace svc::kzg {

namespace {

constexpr uint32_t kTableLimit = 1024;

// L_i(tau) for all i over the domain {0..n-1} via the barycentric weights
// w_i = 1 / ((-1)^(n-1-i) i! (n-1-i)!). Returns empty if tau hits the domain.
std::vector<Fr> lagrange_evals_at(const Fr& tau, uint32_t n) {
  std::vector<Fr> diff(n), evals(n);
  Fr prod_all = Fr::one();
  for (uint32_t j = 0; j < n; j++) {
    diff[j] = tau - Fr::from_u64(j);
    if (diff[j] == Fr::zero()) return {};
    prod_all = prod_all * diff[j];
  }
  std::vector<Fr> fact(n);
  fact[0] = Fr::one();
  for (uint32_t i = 1; i < n; i++) fact[i] = fact[i - 1] * Fr::from_u64(i);
  for (uint32_t i = 0; i < n; i++) {
    Fr denom = fact[i] * fact[n - 1 - i];
    if ((n - 1 - i) & 1) denom = -denom;
    evals[i] = prod_all * (diff[i] * denom).inv();
  }
  return evals;
}

// One proof-matrix cell, computed on demand when the table is absent.
G1Aff cell_on_demand(const Setup& setup, uint64_t i, uint64_t j) {
  if (setup.srs.tau) {
    const Fr tau = *setup.srs.tau;
    Fr dj = tau - Fr::from_u64(j);
    if (!(dj == Fr::zero())) {
      auto evals = lagrange_evals_at(tau, setup.table.n);
      if (!evals.empty()) {
        Fr li = evals[i];
        if (i == j) li = li - Fr::one();
        return G1::generator().mul(li * dj.inv()).to_affine();
      }
    }
  }
  Poly li = lagrange_basis(setup.table.n, size_t(i));
  auto [q, rem] = divide_linear(li, Fr::from_u64(j));
  (void)rem;
  return commit_poly(setup.srs, q);
}

}  // namespace

LagrangeTable build_table(const Srs& srs, uint32_t n) {
  LagrangeTable t;
  t.n = n;
  t.materialized = n <= kTableLimit;

  std::vector<Fr> evals;
  if (srs.tau) evals = lagrange_evals_at(*srs.tau, n);

  if (!evals.empty()) {
    FixedBaseTable g(G1::generator().to_affine());
    std::vector<G1> jac;
    jac.reserve(n);
    for (uint32_t i = 0; i < n; i++) jac.push_back(g.mul(evals[i]));
    t.commitments = batch_to_affine(jac);
    if (t.materialized) {
      std::vector<Fr> dinv(n);
      for (uint32_t j = 0; j < n; j++)
        dinv[j] = (*srs.tau - Fr::from_u64(j)).inv();
      std::vector<G1> cells;
      cells.reserve(size_t(n) * n);
      for (uint32_t i = 0; i < n; i++)
        for (uint32_t j = 0; j < n; j++) {
          Fr num = i == j ? evals[i] - Fr::one() : evals[i];
          cells.push_back(g.mul(num * dinv[j]));
        }
      auto flat = batch_to_affine(cells);
      t.proofs.resize(n);
      for (uint32_t i = 0; i < n; i++)
        t.proofs[i].assign(flat.begin() + size_t(i) * n,
                           flat.begin() + size_t(i + 1) * n);
    }
    return t;
  }

  // Honest path: polynomial division plus multi-scalar multiplication.
  t.commitments.reserve(n);
  std::vector<Poly> basis;
  basis.reserve(n);
  for (uint32_t i = 0; i < n; i++) {
    basis.push_back(lagrange_basis(n, i));
    t.commitments.push_back(commit_poly(srs, basis[i]));
  }
  if (t.materialized) {
    t.proofs.resize(n);
    for (uint32_t i = 0; i < n; i++)
      for (uint32_t j = 0; j < n; j++) {
        auto [q, rem] = divide_linear(basis[i], Fr::from_u64(j));
        (void)rem;
        t.proofs[i].push_back(commit_poly(srs, q));
      }
  }
  return t;
}

Setup keygen(uint32_t n, uint64_t seed) {
  if (n == 0) throw std::invalid_argument("domain size must be positive");
  Setup s;
  s.srs = trusted_setup(n, seed, /*retain_tau=*/true);
  s.table = build_table(s.srs, n);
  return s;
}

State commit(const Setup& setup, const std::vector<Fr>& messages) {
  if (messages.size() != setup.table.n)
    throw std::invalid_argument("message count does not match the domain");
  State st;
  st.messages = messages;
  st.commitment = msm_g1(setup.table.commitments, messages).to_affine();
  return st;
}

G1Aff open(const Setup& setup, const State& state, uint64_t index) {
  uint32_t n = setup.table.n;
  if (index >= n) throw std::out_of_range("index out of range");
  if (setup.table.materialized) {
    // Column MSM: the quotient of the interpolant is the message-weighted
    // combination of the basis quotients, exactly, by linearity of division.
    std::vector<G1Aff> col(n);
    for (uint32_t i = 0; i < n; i++) col[i] = setup.table.proofs[i][index];
    return msm_g1(col, state.messages).to_affine();
  }
  if (setup.srs.tau) {
    auto evals = lagrange_evals_at(*setup.srs.tau, n);
    Fr dj = *setup.srs.tau - Fr::from_u64(index);
    if (!evals.empty() && !(dj == Fr::zero())) {
      Fr q = Fr::zero();
      for (uint32_t i = 0; i < n; i++) {
        if (i == index) continue;
        q = q + state.messages[i] * evals[i];
      }
      // (phi(tau) - m_index) / (tau - index) with phi(tau) split so the
      // m_index L_index(tau) term carries the -1.
      q = q + state.messages[index] * (evals[index] - Fr::one());
      return G1::generator().mul(q * dj.inv()).to_affine();
    }
  }
  std::vector<Fr> xs;
  for (uint32_t j = 0; j < n; j++) xs.push_back(Fr::from_u64(j));
  Poly phi = interpolate(xs, state.messages);
  auto [value, proof] = open_poly(setup.srs, phi, Fr::from_u64(index));
  (void)value;
  return proof;
}

bool verify(const Setup& setup, const G1Aff& commitment, const Fr& message,
            uint64_t index, const G1Aff& proof) {
  return verify_kzg(setup.srs, commitment, Fr::from_u64(index), message, proof);
}

UpdateOutcome update(const Setup& setup, const State& state,
                     const UpdateBatch& batch) {
  validate_scalar_batch(batch, setup.table.n);
  UpdateOutcome out;
  out.state = state;
  out.info.backend = BackendId::kzg;
  G1 acc = G1::from_affine(state.commitment);
  for (const auto& d : batch) {
    if (!(state.messages[d.index] == d.old_value))
      throw std::invalid_argument("stale old value in update batch");
    Fr delta = d.new_value - d.old_value;
    acc = acc.add(G1::from_affine(setup.table.commitments[d.index]).mul(delta));
    out.g1_exps++;
    out.state.messages[d.index] = d.new_value;
  }
  out.state.commitment = acc.to_affine();
  return out;
}

ProofUpdateOutcome proof_update(const Setup& setup, const G1Aff& proof,
                                uint64_t index, const UpdateBatch& batch) {
  validate_scalar_batch(batch, setup.table.n);
  if (index >= setup.table.n) throw std::out_of_range("index out of range");
  ProofUpdateOutcome out;
  G1 acc = G1::from_affine(proof);
  for (const auto& d : batch) {
    Fr delta = d.new_value - d.old_value;
    if (delta == Fr::zero()) continue;
    G1Aff cell = setup.table.materialized
                     ? setup.table.proofs[d.index][index]
                     : cell_on_demand(setup, d.index, index);
    acc = acc.add(G1::from_affine(cell).mul(delta));
    out.g1_exps++;
  }
  out.proof = acc.to_affine();
  return out;
}

}  // namespace svc::kzg
