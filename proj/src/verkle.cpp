#include "svc/verkle.hpp"

#include <map>
#include <stdexcept>

#include "svc/msm.hpp"
#include "svc/sha256.hpp"

namespace svc::verkle {

namespace {

// Length-prefixed element framing for the challenge derivations.
class Transcript {
 public:
  void g1(const G1Aff& p) {
    auto enc = g1_compress(p);
    raw(enc.data(), enc.size());
  }
  void fr(const Fr& s) {
    uint8_t b[Fr::BYTES];
    s.to_bytes_be(b);
    raw(b, sizeof b);
  }
  Fr finish() {
    Hash32 d = h_.finish();
    return Fr::from_bytes_reduce(d.data());
  }

 private:
  void raw(const uint8_t* p, size_t n) {
    uint8_t len[4] = {uint8_t(n), uint8_t(n >> 8), uint8_t(n >> 16),
                      uint8_t(n >> 24)};
    h_.append(len, 4);
    h_.append(p, n);
  }
  Sha256 h_;
};

bool power_of_two(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

uint32_t log2_exact(uint64_t v) {
  uint32_t b = 0;
  while ((uint64_t(1) << b) < v) b++;
  return b;
}

unsigned digit_at(uint64_t index, uint32_t level, uint32_t height,
                  const Setup& s) {
  return unsigned(index >> (s.digit_bits * (height - level)) & (s.c - 1));
}

// r binds the path commitments (root included), the proven child hashes,
// and the digits, in that order.
Fr challenge_r(const G1Aff& root, const std::vector<G1Aff>& path,
               const std::vector<Fr>& child_hashes,
               const std::vector<unsigned>& digits) {
  Transcript tr;
  tr.g1(root);
  for (const auto& c : path) tr.g1(c);
  for (const auto& u : child_hashes) tr.fr(u);
  for (unsigned d : digits) tr.fr(Fr::from_u64(d));
  return tr.finish();
}

Fr challenge_t(const Fr& r, const G1Aff& d) {
  Transcript tr;
  tr.fr(r);
  tr.g1(d);
  return tr.finish();
}

// D = prod openings^(r^j); pi = prod openings^(r^j / (t - b_{j+1})).
struct Aggregate {
  G1Aff d;
  G1Aff pi;
  Fr r, t;
};

Aggregate aggregate_openings(const std::vector<G1Aff>& openings,
                             const G1Aff& root, const std::vector<G1Aff>& path,
                             const std::vector<Fr>& child_hashes,
                             const std::vector<unsigned>& digits) {
  Aggregate out;
  out.r = challenge_r(root, path, child_hashes, digits);
  std::vector<Fr> powers(openings.size());
  Fr rp = Fr::one();
  for (size_t j = 0; j < openings.size(); j++) {
    powers[j] = rp;
    rp = rp * out.r;
  }
  G1 d_acc = msm_g1(openings, powers);
  out.d = d_acc.to_affine();
  out.t = challenge_t(out.r, out.d);
  std::vector<Fr> scaled(openings.size());
  for (size_t j = 0; j < openings.size(); j++) {
    Fr denom = out.t - Fr::from_u64(digits[j]);
    if (denom == Fr::zero())
      throw std::runtime_error("transcript point hit an evaluation digit");
    scaled[j] = powers[j] * denom.inv();
  }
  out.pi = msm_g1(openings, scaled).to_affine();
  return out;
}

NodePath carry_path(uint32_t level, uint64_t idx, uint32_t digit_bits) {
  return NodePath{uint8_t(level * digit_bits), idx};
}

void check_info_header(const UpdateInfo& info, uint32_t height,
                       uint32_t digit_bits) {
  if (info.backend != BackendId::verkle)
    throw std::invalid_argument("update information is for another backend");
  if (info.height != height * digit_bits)
    throw std::invalid_argument("update information height mismatch");
}

}  // namespace

Fr hash_point(const G1Aff& p) {
  auto enc = g1_compress(p);
  Hash32 d = sha256(enc.data(), enc.size());
  return Fr::from_bytes_reduce(d.data());
}

Fr hash_scalar(const Fr& m) {
  uint8_t b[Fr::BYTES];
  m.to_bytes_be(b);
  Hash32 d = sha256(b, sizeof b);
  return Fr::from_bytes_reduce(d.data());
}

Setup keygen(uint32_t c, uint64_t seed) {
  if (!power_of_two(c) || c < 2 || c > 1024)
    throw std::invalid_argument("degree must be a power of two in [2, 1024]");
  Setup s;
  s.c = c;
  s.digit_bits = log2_exact(c);
  s.srs = trusted_setup(c, seed, true);
  s.table = kzg::build_table(s.srs, c);
  return s;
}

CommitResult commit(const std::vector<Fr>& messages, const Setup& setup) {
  uint64_t n = messages.size();
  uint32_t h = 0;
  uint64_t power = 1;
  while (power < n && h < 40) {
    power *= setup.c;
    h++;
  }
  if (h == 0 || power != n)
    throw std::invalid_argument("leaf count must be a positive power of the degree");

  CommitResult out;
  out.tree.c = setup.c;
  out.tree.digit_bits = setup.digit_bits;
  out.tree.height = h;
  out.tree.messages = messages;
  out.tree.levels.resize(h);
  for (uint32_t j = 0; j < h; j++)
    out.tree.levels[j].resize(uint64_t(1) << (setup.digit_bits * j));

  std::vector<Fr> u(setup.c);
  for (uint32_t j = h; j-- > 0;) {
    for (uint64_t idx = 0; idx < out.tree.levels[j].size(); idx++) {
      for (uint32_t i = 0; i < setup.c; i++)
        u[i] = j + 1 == h
                   ? hash_scalar(messages[idx * setup.c + i])
                   : hash_point(out.tree.levels[j + 1][idx * setup.c + i]);
      out.tree.levels[j][idx] = msm_g1(setup.table.commitments, u).to_affine();
    }
  }
  out.root_hash = hash_point(out.tree.levels[0][0]);
  return out;
}

OpenResult open(const Tree& tree, uint64_t index, const Setup& setup) {
  if (tree.c != setup.c) throw std::invalid_argument("tree degree mismatch");
  if (index >= tree.leaf_count()) throw std::out_of_range("leaf index out of range");
  uint32_t h = tree.height;

  OpenResult out;
  out.context.index = index;
  std::vector<unsigned> digits(h);
  std::vector<Fr> child_hashes(h);
  std::vector<G1Aff> column(setup.c);
  for (uint32_t j = 0; j < h; j++) {
    digits[j] = digit_at(index, j + 1, h, setup);
    uint64_t prefix = index >> (setup.digit_bits * (h - j));
    std::vector<Fr> u(setup.c);
    if (j + 1 < h) {
      std::vector<G1Aff> row(setup.c);
      for (uint32_t i = 0; i < setup.c; i++) {
        row[i] = tree.levels[j + 1][prefix * setup.c + i];
        u[i] = hash_point(row[i]);
      }
      out.context.siblings.push_back(std::move(row));
    } else {
      out.context.leaf_siblings.assign(
          tree.messages.begin() + prefix * setup.c,
          tree.messages.begin() + (prefix + 1) * setup.c);
      for (uint32_t i = 0; i < setup.c; i++)
        u[i] = hash_scalar(out.context.leaf_siblings[i]);
    }
    child_hashes[j] = u[digits[j]];
    for (uint32_t i = 0; i < setup.c; i++)
      column[i] = setup.table.proofs[i][digits[j]];
    out.context.openings.push_back(msm_g1(column, u).to_affine());
  }

  for (uint32_t j = 1; j < h; j++)
    out.proof.path.push_back(
        tree.levels[j][index >> (setup.digit_bits * (h - j))]);
  Aggregate agg = aggregate_openings(out.context.openings, tree.levels[0][0],
                                     out.proof.path, child_hashes, digits);
  out.proof.d = agg.d;
  out.proof.pi = agg.pi;
  return out;
}

bool verify(const G1Aff& root, const Fr& message, uint64_t index,
            const Proof& proof, const Setup& setup) {
  uint32_t h = uint32_t(proof.path.size()) + 1;
  if (setup.digit_bits * h > 40) return false;
  if (index >> (setup.digit_bits * h)) return false;

  std::vector<unsigned> digits(h);
  std::vector<Fr> child_hashes(h);
  for (uint32_t j = 0; j < h; j++) {
    digits[j] = digit_at(index, j + 1, h, setup);
    child_hashes[j] =
        j + 1 < h ? hash_point(proof.path[j]) : hash_scalar(message);
  }
  Fr r = challenge_r(root, proof.path, child_hashes, digits);
  Fr t = challenge_t(r, proof.d);

  Fr y = Fr::zero();
  G1 e_acc = G1::identity();
  Fr rp = Fr::one();
  for (uint32_t j = 0; j < h; j++) {
    Fr denom = t - Fr::from_u64(digits[j]);
    if (denom == Fr::zero()) return false;
    Fr w = rp * denom.inv();
    y = y + w * child_hashes[j];
    const G1Aff& cj = j == 0 ? root : proof.path[j - 1];
    e_acc = e_acc.add(G1::from_affine(cj).mul(w));
    rp = rp * r;
  }
  G1 lhs = e_acc.add(G1::from_affine(proof.d).neg())
               .add(G1::generator().mul(y).neg());
  G2 tau_minus_t = G2::from_affine(setup.srs.g2[1])
                       .add(G2::from_affine(setup.srs.g2[0]).mul(t).neg());
  return pairing_product_is_one(
      {{lhs.to_affine(), setup.srs.g2[0]},
       {G1::from_affine(proof.pi).neg().to_affine(), tau_minus_t.to_affine()}});
}

std::vector<uint8_t> encode_proof(const Proof& proof) {
  std::vector<uint8_t> out;
  uint32_t h = uint32_t(proof.path.size()) + 1;
  out.push_back(uint8_t(h));
  auto put = [&out](const G1Aff& p) {
    auto enc = g1_compress(p);
    out.insert(out.end(), enc.begin(), enc.end());
  };
  for (const auto& c : proof.path) put(c);
  put(proof.d);
  put(proof.pi);
  return out;
}

std::optional<Proof> decode_proof(const std::vector<uint8_t>& bytes) {
  if (bytes.empty()) return std::nullopt;
  uint32_t h = bytes[0];
  if (h < 1 || h > 40) return std::nullopt;
  if (bytes.size() != 1 + size_t(h + 1) * G1_BYTES) return std::nullopt;
  Proof p;
  size_t pos = 1;
  auto get = [&bytes, &pos]() { return g1_decompress(bytes.data() + pos); };
  for (uint32_t j = 0; j + 1 < h; j++) {
    auto c = get();
    if (!c) return std::nullopt;
    p.path.push_back(*c);
    pos += G1_BYTES;
  }
  auto d = get();
  if (!d) return std::nullopt;
  p.d = *d;
  pos += G1_BYTES;
  auto pi = get();
  if (!pi) return std::nullopt;
  p.pi = *pi;
  return p;
}

UpdateOutcome update(const Tree& tree, const ScalarBatch& batch,
                     const Setup& setup) {
  if (tree.c != setup.c) throw std::invalid_argument("tree degree mismatch");
  validate_scalar_batch(batch, tree.leaf_count());
  for (const auto& d : batch)
    if (!(tree.messages[d.index] == d.old_value))
      throw std::invalid_argument("stale old value in update batch");

  UpdateOutcome out;
  out.tree = tree;
  uint32_t h = tree.height;
  out.info.backend = BackendId::verkle;
  out.info.height = uint8_t(h * setup.digit_bits);

  // Per-level queues of child hash deltas, bottom-up.
  std::map<uint64_t, std::vector<std::pair<unsigned, Fr>>> pending;
  for (const auto& d : batch) {
    Fr delta = hash_scalar(d.new_value) - hash_scalar(d.old_value);
    out.tree.messages[d.index] = d.new_value;
    pending[d.index / setup.c].push_back({unsigned(d.index % setup.c), delta});
    uint8_t payload[Fr::BYTES];
    d.new_value.to_bytes_be(payload);
    out.info.entries.push_back({carry_path(h, d.index, setup.digit_bits),
                                std::vector<uint8_t>(payload, payload + Fr::BYTES)});
  }
  for (uint32_t j = h; j-- > 0;) {
    std::map<uint64_t, std::vector<std::pair<unsigned, Fr>>> next;
    for (const auto& [idx, deltas] : pending) {
      const G1Aff& old_c = out.tree.levels[j][idx];
      G1 acc = G1::from_affine(old_c);
      for (const auto& [digit, du] : deltas) {
        if (du == Fr::zero()) continue;
        acc = acc.add(G1::from_affine(setup.table.commitments[digit]).mul(du));
        out.g1_exps++;
      }
      G1Aff new_c = acc.to_affine();
      Fr du_up = hash_point(new_c) - hash_point(old_c);
      out.tree.levels[j][idx] = new_c;
      auto enc = g1_compress(new_c);
      out.info.entries.push_back({carry_path(j, idx, setup.digit_bits),
                                  std::vector<uint8_t>(enc.begin(), enc.end())});
      if (j > 0)
        next[idx / setup.c].push_back({unsigned(idx % setup.c), du_up});
    }
    pending = std::move(next);
  }
  out.info.sort_canonical();
  out.root_hash = hash_point(out.tree.levels[0][0]);
  return out;
}

ProofUpdateOutcome proof_update(const Proof& proof, const Context& context,
                                uint64_t index, const UpdateInfo& info,
                                const Setup& setup) {
  uint32_t h = uint32_t(context.openings.size());
  if (h == 0 || context.index != index ||
      proof.path.size() != size_t(h) - 1 ||
      context.siblings.size() != size_t(h) - 1 ||
      context.leaf_siblings.size() != setup.c)
    throw std::invalid_argument("context does not match the proof");
  check_info_header(info, h, setup.digit_bits);

  ProofUpdateOutcome out;
  out.proof = proof;
  out.context = context;
  if (info.entries.empty()) return out;

  const auto* root_bytes = info.find(NodePath{0, 0});
  if (!root_bytes || root_bytes->size() != G1_BYTES)
    throw std::invalid_argument("broadcast misses the root commitment");
  auto new_root = g1_decompress(root_bytes->data());
  if (!new_root) throw std::invalid_argument("published commitment malformed");

  std::vector<unsigned> digits(h);
  for (uint32_t j = 0; j < h; j++) digits[j] = digit_at(index, j + 1, h, setup);

  // Per-level proofs move by quotient-table multiples of the child deltas.
  for (uint32_t j = 0; j < h; j++) {
    uint64_t prefix = index >> (setup.digit_bits * (h - j));
    G1 acc = G1::from_affine(context.openings[j]);
    bool touched = false;
    for (uint32_t i = 0; i < setup.c; i++) {
      NodePath child =
          carry_path(j + 1, prefix * setup.c + i, setup.digit_bits);
      const auto* bytes = info.find(child);
      if (!bytes) continue;
      Fr du;
      if (j + 1 < h) {
        if (bytes->size() != G1_BYTES)
          throw std::invalid_argument("published commitment malformed");
        auto point = g1_decompress(bytes->data());
        if (!point) throw std::invalid_argument("published commitment malformed");
        du = hash_point(*point) - hash_point(out.context.siblings[j][i]);
        out.context.siblings[j][i] = *point;
      } else {
        if (bytes->size() != Fr::BYTES)
          throw std::invalid_argument("published message malformed");
        auto value = Fr::from_bytes_be(bytes->data());
        if (!value) throw std::invalid_argument("published message malformed");
        du = hash_scalar(*value) - hash_scalar(out.context.leaf_siblings[i]);
        out.context.leaf_siblings[i] = *value;
      }
      if (du == Fr::zero()) continue;
      acc = acc.add(G1::from_affine(setup.table.proofs[i][digits[j]]).mul(du));
      out.g1_exps++;
      touched = true;
    }
    if (touched) out.context.openings[j] = acc.to_affine();
  }

  for (uint32_t j = 1; j < h; j++) {
    const auto* bytes = info.find(
        carry_path(j, index >> (setup.digit_bits * (h - j)), setup.digit_bits));
    if (!bytes) continue;
    if (bytes->size() != G1_BYTES)
      throw std::invalid_argument("published commitment malformed");
    auto point = g1_decompress(bytes->data());
    if (!point) throw std::invalid_argument("published commitment malformed");
    out.proof.path[j - 1] = *point;
  }

  std::vector<Fr> child_hashes(h);
  for (uint32_t j = 0; j < h; j++)
    child_hashes[j] = j + 1 < h
                          ? hash_point(out.proof.path[j])
                          : hash_scalar(out.context.leaf_siblings[digits[j]]);
  Aggregate agg = aggregate_openings(out.context.openings, *new_root,
                                     out.proof.path, child_hashes, digits);
  out.proof.d = agg.d;
  out.proof.pi = agg.pi;
  out.g1_exps += 2 * h;
  return out;
}

}  // namespace svc::verkle
