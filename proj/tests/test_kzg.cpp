#include <doctest.h>

#include <set>
#include <stdexcept>

#include "svc/kzg_vc.hpp"
#include "svc/rng.hpp"
#include "util.hpp"
#include "vectors/curve_vectors.hpp"

using namespace svc;

namespace {

std::string g1_hex(const G1Aff& p) {
  auto enc = g1_compress(p);
  return testutil::to_hex(enc.data(), enc.size());
}

std::vector<Fr> rand_messages(DeterministicRng& rng, size_t n) {
  std::vector<Fr> v;
  for (size_t i = 0; i < n; i++) v.push_back(rng.next_fr());
  return v;
}

kzg::UpdateBatch rand_batch(DeterministicRng& rng, const std::vector<Fr>& msgs,
                            size_t k) {
  std::set<uint64_t> picked;
  while (picked.size() < k) picked.insert(rng.next_index(msgs.size()));
  kzg::UpdateBatch batch;
  for (uint64_t idx : picked) batch.push_back({idx, msgs[idx], rng.next_fr()});
  return batch;
}

std::vector<Fr> apply_batch(std::vector<Fr> msgs, const kzg::UpdateBatch& batch) {
  for (const auto& d : batch) msgs[d.index] = d.new_value;
  return msgs;
}

}  // namespace

TEST_CASE("single-point table: one commitment, identity proof cell") {
  auto setup = kzg::keygen(1, 5);
  REQUIRE(setup.table.commitments.size() == 1);
  REQUIRE(setup.table.proofs.size() == 1);
  CHECK(G1::from_affine(setup.table.commitments[0]).eq(G1::generator()));
  CHECK(setup.table.proofs[0][0].inf);
}

TEST_CASE("table invariant: every cell proves its basis value") {
  auto setup = kzg::keygen(4, 6);
  for (uint64_t i = 0; i < 4; i++)
    for (uint64_t j = 0; j < 4; j++) {
      Fr expected = i == j ? Fr::one() : Fr::zero();
      CHECK(verify_kzg(setup.srs, setup.table.commitments[i], Fr::from_u64(j),
                       expected, setup.table.proofs[i][j]));
    }
}

TEST_CASE("keygen is deterministic in the seed") {
  auto a = kzg::keygen(4, 77), b = kzg::keygen(4, 77);
  for (size_t i = 0; i < 4; i++) {
    CHECK(g1_hex(a.table.commitments[i]) == g1_hex(b.table.commitments[i]));
    for (size_t j = 0; j < 4; j++)
      CHECK(g1_hex(a.table.proofs[i][j]) == g1_hex(b.table.proofs[i][j]));
  }
}

TEST_CASE("secret-evaluation and polynomial table builds agree") {
  Srs with_tau = trusted_setup(8, 21, /*retain_tau=*/true);
  Srs without = with_tau;
  without.tau.reset();
  auto fast = kzg::build_table(with_tau, 8);
  auto slow = kzg::build_table(without, 8);
  for (size_t i = 0; i < 8; i++) {
    CHECK(g1_hex(fast.commitments[i]) == g1_hex(slow.commitments[i]));
    for (size_t j = 0; j < 8; j++)
      CHECK(g1_hex(fast.proofs[i][j]) == g1_hex(slow.proofs[i][j]));
  }
}

TEST_CASE("commit pinned cases and frozen vectors") {
  auto setup = kzg::keygen(8, 42);
  auto zero = kzg::commit(setup, std::vector<Fr>(8, Fr::zero()));
  CHECK(zero.commitment.inf);

  std::vector<Fr> msgs;
  for (uint64_t m : {3, 1, 4, 1, 5, 9, 2, 6}) msgs.push_back(Fr::from_u64(m));
  auto st = kzg::commit(setup, msgs);
  CHECK(g1_hex(st.commitment) == refvec::kzg8_commit);

  G1Aff pi2 = kzg::open(setup, st, 2);
  CHECK(g1_hex(pi2) == refvec::kzg8_open2);
  CHECK(kzg::verify(setup, st.commitment, Fr::from_u64(4), 2, pi2));

  CHECK_THROWS_AS(kzg::commit(setup, std::vector<Fr>(7, Fr::zero())),
                  std::invalid_argument);
}

TEST_CASE("constant vector opens with the identity proof") {
  auto setup = kzg::keygen(4, 9);
  std::vector<Fr> msgs(4, Fr::from_u64(31));
  auto st = kzg::commit(setup, msgs);
  G1Aff pi = kzg::open(setup, st, 0);
  CHECK(pi.inf);
  CHECK(kzg::verify(setup, st.commitment, Fr::from_u64(31), 0, pi));
}

TEST_CASE("open verifies and tampers reject") {
  DeterministicRng rng(3001);
  auto setup = kzg::keygen(4, 10);
  auto msgs = rand_messages(rng, 4);
  auto st = kzg::commit(setup, msgs);
  for (uint64_t i = 0; i < 4; i++) {
    G1Aff pi = kzg::open(setup, st, i);
    CHECK(kzg::verify(setup, st.commitment, msgs[i], i, pi));
    CHECK(!kzg::verify(setup, st.commitment, msgs[i] + Fr::one(), i, pi));
    CHECK(!kzg::verify(setup, st.commitment, msgs[i], (i + 1) % 4, pi));
    G1Aff bad = G1::from_affine(pi).add(G1::generator()).to_affine();
    CHECK(!kzg::verify(setup, st.commitment, msgs[i], i, bad));
  }
  CHECK_THROWS_AS(kzg::open(setup, st, 4), std::out_of_range);
}

TEST_CASE("open agrees across the three computation paths") {
  DeterministicRng rng(3002);
  auto setup = kzg::keygen(8, 12);
  auto msgs = rand_messages(rng, 8);
  auto st = kzg::commit(setup, msgs);
  for (uint64_t i = 0; i < 8; i++) {
    G1Aff via_table = kzg::open(setup, st, i);

    kzg::Setup no_table = setup;
    no_table.table.proofs.clear();
    no_table.table.materialized = false;
    G1Aff via_tau = kzg::open(no_table, st, i);

    kzg::Setup honest = no_table;
    honest.srs.tau.reset();
    G1Aff via_poly = kzg::open(honest, st, i);

    CHECK(g1_hex(via_table) == g1_hex(via_tau));
    CHECK(g1_hex(via_table) == g1_hex(via_poly));
  }
}

TEST_CASE("update matches fresh commitment and broadcasts nothing") {
  DeterministicRng rng(3003);
  for (uint32_t n : {2u, 5u, 16u}) {
    auto setup = kzg::keygen(n, 100 + n);
    auto msgs = rand_messages(rng, n);
    auto st = kzg::commit(setup, msgs);
    for (int round = 0; round < 4; round++) {
      size_t k = 1 + rng.next_index(n);
      auto batch = rand_batch(rng, st.messages, k);
      auto out = kzg::update(setup, st, batch);
      CHECK(out.info.entries.empty());
      CHECK(out.info.backend == BackendId::kzg);
      CHECK(out.g1_exps == batch.size());

      auto fresh = kzg::commit(setup, apply_batch(st.messages, batch));
      CHECK(g1_hex(out.state.commitment) == g1_hex(fresh.commitment));
      st = out.state;
    }
  }
}

TEST_CASE("zero-delta batch leaves the commitment unchanged") {
  DeterministicRng rng(3004);
  auto setup = kzg::keygen(4, 14);
  auto st = kzg::commit(setup, rand_messages(rng, 4));
  kzg::UpdateBatch batch = {{2, st.messages[2], st.messages[2]}};
  auto out = kzg::update(setup, st, batch);
  CHECK(g1_hex(out.state.commitment) == g1_hex(st.commitment));
  CHECK(out.g1_exps == 1);
}

TEST_CASE("updates commute") {
  DeterministicRng rng(3005);
  auto setup = kzg::keygen(8, 15);
  auto st = kzg::commit(setup, rand_messages(rng, 8));
  kzg::UpdateBatch b1 = {{1, st.messages[1], rng.next_fr()}};
  kzg::UpdateBatch b2 = {{6, st.messages[6], rng.next_fr()}};
  auto ab = kzg::update(setup, kzg::update(setup, st, b1).state, b2);
  auto ba = kzg::update(setup, kzg::update(setup, st, b2).state, b1);
  CHECK(g1_hex(ab.state.commitment) == g1_hex(ba.state.commitment));
}

TEST_CASE("update rejects malformed batches") {
  DeterministicRng rng(3006);
  auto setup = kzg::keygen(4, 16);
  auto st = kzg::commit(setup, rand_messages(rng, 4));
  CHECK_THROWS_AS(
      kzg::update(setup, st,
                  {{1, st.messages[1], Fr::one()}, {1, st.messages[1], Fr::one()}}),
      std::invalid_argument);
  CHECK_THROWS_AS(kzg::update(setup, st, {{4, Fr::zero(), Fr::one()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(kzg::update(setup, st, {{1, st.messages[1] + Fr::one(), Fr::one()}}),
                  std::invalid_argument);
}

TEST_CASE("proof updates track every index, including updated ones") {
  DeterministicRng rng(3007);
  for (uint32_t n : {4u, 16u}) {
    auto setup = kzg::keygen(n, 200 + n);
    auto st = kzg::commit(setup, rand_messages(rng, n));
    for (int round = 0; round < 3; round++) {
      size_t k = 1 + rng.next_index(n);
      auto batch = rand_batch(rng, st.messages, k);
      auto out = kzg::update(setup, st, batch);
      for (uint64_t x = 0; x < n; x++) {
        auto upd = kzg::proof_update(setup, kzg::open(setup, st, x), x, batch);
        CHECK(upd.g1_exps <= batch.size());
        G1Aff fresh = kzg::open(setup, out.state, x);
        CHECK(g1_hex(upd.proof) == g1_hex(fresh));
        CHECK(kzg::verify(setup, out.state.commitment, out.state.messages[x], x,
                          upd.proof));
      }
      st = out.state;
    }
  }
}

TEST_CASE("empty batch keeps the proof; on-demand cells match the table") {
  DeterministicRng rng(3008);
  auto setup = kzg::keygen(8, 18);
  auto st = kzg::commit(setup, rand_messages(rng, 8));
  G1Aff pi = kzg::open(setup, st, 3);
  auto same = kzg::proof_update(setup, pi, 3, {});
  CHECK(g1_hex(same.proof) == g1_hex(pi));
  CHECK(same.g1_exps == 0);

  // Force the on-demand path and compare with the materialized one.
  auto batch = rand_batch(rng, st.messages, 3);
  auto with_table = kzg::proof_update(setup, pi, 3, batch);
  kzg::Setup no_table = setup;
  no_table.table.proofs.clear();
  no_table.table.materialized = false;
  auto on_demand = kzg::proof_update(no_table, pi, 3, batch);
  CHECK(g1_hex(with_table.proof) == g1_hex(on_demand.proof));
  kzg::Setup honest = no_table;
  honest.srs.tau.reset();
  auto honest_cells = kzg::proof_update(honest, pi, 3, batch);
  CHECK(g1_hex(with_table.proof) == g1_hex(honest_cells.proof));
}
