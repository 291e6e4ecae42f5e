#include "svc/lattice_hmt.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "svc/rng.hpp"

namespace svc::lat {

namespace {

constexpr char kMagic[8] = {'S', 'V', 'C', 'L', 'A', 'T', '0', '1'};
constexpr uint64_t kMaxLeaves = 256;  // keeps digit sums below the modulus

uint32_t ceil_log2(uint32_t q) {
  uint32_t b = 0;
  while ((uint64_t(1) << b) < q) b++;
  return b;
}

// Multiply one half of the matrix (offset 0 for L, d for R) by a digit
// vector; accumulation fits 64 bits for every supported parameter size.
Fq half_matvec(const Params& p, size_t col_offset, const Digits& v) {
  if (v.size() != p.d) throw std::invalid_argument("digit vector length mismatch");
  Fq out(p.k_dim);
  for (uint32_t r = 0; r < p.k_dim; r++) {
    const uint32_t* row = p.m.data() + size_t(r) * 2 * p.d + col_offset;
    uint64_t acc = 0;
    for (uint32_t c = 0; c < p.d; c++) acc += uint64_t(row[c]) * v[c];
    out[r] = uint32_t(acc % p.q);
  }
  return out;
}

void check_message(const Params& p, uint32_t msg) {
  if (msg >= p.q) throw std::invalid_argument("message outside the residue field");
}

bool digits_well_formed(const Params& p, const Digits& v) {
  if (v.size() != p.d) return false;
  for (uint32_t x : v)
    if (x >= p.q) return false;
  return true;
}

}  // namespace

Params generate(uint64_t seed) {
  Params p;
  p.k_dim = 8;
  p.q = 12289;
  p.log_q = ceil_log2(p.q);
  p.d = p.k_dim * p.log_q;
  DeterministicRng rng(seed);
  p.m.resize(size_t(p.k_dim) * 2 * p.d);
  for (auto& e : p.m) e = uint32_t(rng.next_u64() % p.q);
  return p;
}

Digits decompose(const Params& params, const Fq& v) {
  if (v.size() != params.k_dim)
    throw std::invalid_argument("residue vector length mismatch");
  Digits out(params.d);
  for (uint32_t i = 0; i < params.k_dim; i++)
    for (uint32_t b = 0; b < params.log_q; b++)
      out[i * params.log_q + b] = (v[i] >> b) & 1;
  return out;
}

Fq g_inverse(const Params& params, const Digits& digits) {
  if (digits.size() != params.d)
    throw std::invalid_argument("digit vector length mismatch");
  Fq out(params.k_dim);
  for (uint32_t i = 0; i < params.k_dim; i++) {
    uint64_t acc = 0;
    for (uint32_t b = 0; b < params.log_q; b++)
      acc += uint64_t(digits[i * params.log_q + b]) << b;
    out[i] = uint32_t(acc % params.q);
  }
  return out;
}

Digits encode_message(const Params& params, uint32_t msg) {
  check_message(params, msg);
  Fq e(params.k_dim, 0);
  e[0] = msg;
  return decompose(params, e);
}

Fq hash_leaf(const Params& params, uint32_t msg) {
  return half_matvec(params, 0, encode_message(params, msg));
}

Fq hash_pair(const Params& params, const Digits& x, const Digits& y) {
  Fq lx = half_matvec(params, 0, x);
  Fq ry = half_matvec(params, params.d, y);
  for (uint32_t r = 0; r < params.k_dim; r++)
    lx[r] = uint32_t((uint64_t(lx[r]) + ry[r]) % params.q);
  return lx;
}

Digits chain(const Params& params, uint32_t height, uint64_t index, uint32_t j,
             uint32_t msg, uint64_t* factor_steps) {
  if (index >= (uint64_t(1) << height))
    throw std::invalid_argument("leaf index out of range");
  if (j > height) throw std::invalid_argument("depth out of range");
  Digits cur = decompose(params, hash_leaf(params, msg));
  for (uint32_t depth = height; depth > j; depth--) {
    unsigned c = (index >> (height - depth)) & 1;
    cur = decompose(params, half_matvec(params, c ? params.d : 0, cur));
    if (factor_steps) (*factor_steps)++;
  }
  return cur;
}

CommitResult commit(const std::vector<uint32_t>& messages, const Params& params) {
  uint64_t n = messages.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("leaf count must be a power of two");
  if (n > kMaxLeaves)
    throw std::invalid_argument("leaf count exceeds the digit-sum bound");
  for (uint32_t msg : messages) check_message(params, msg);
  uint32_t h = 0;
  while ((uint64_t(1) << h) < n) h++;

  CommitResult out;
  out.tree.height = h;
  out.tree.messages = messages;
  out.tree.levels.resize(h + 1);
  for (uint32_t d = 0; d <= h; d++)
    out.tree.levels[d].assign(uint64_t(1) << d, Digits(params.d, 0));

  // One upward walk per leaf reuses each chain prefix.
  for (uint64_t i = 0; i < n; i++) {
    Digits cur = decompose(params, hash_leaf(params, messages[i]));
    for (uint32_t depth = h;; depth--) {
      Digits& node = out.tree.levels[depth][i >> (h - depth)];
      for (uint32_t t = 0; t < params.d; t++)
        node[t] = uint32_t((uint64_t(node[t]) + cur[t]) % params.q);
      if (depth == 0) break;
      unsigned c = (i >> (h - depth)) & 1;
      cur = decompose(params, half_matvec(params, c ? params.d : 0, cur));
    }
  }
  out.digest = g_inverse(params, out.tree.levels[0][0]);
  return out;
}

Proof open(const Tree& tree, uint64_t index) {
  if (index >= tree.leaf_count()) throw std::out_of_range("leaf index out of range");
  Proof p;
  p.n = uint32_t(tree.leaf_count());
  p.index = index;
  for (uint32_t j = 0; j < tree.height; j++) {
    uint64_t prefix = index >> (tree.height - j);
    p.pairs.push_back(
        {tree.levels[j + 1][2 * prefix], tree.levels[j + 1][2 * prefix + 1]});
  }
  return p;
}

bool verify(const Fq& digest, uint32_t msg, const Proof& proof,
            const Params& params) {
  if (digest.size() != params.k_dim || msg >= params.q) return false;
  uint64_t n = proof.n;
  if (n == 0 || (n & (n - 1)) != 0 || proof.index >= n) return false;
  uint32_t h = 0;
  while ((uint64_t(1) << h) < n) h++;
  if (proof.pairs.size() != h) return false;
  for (const auto& pair : proof.pairs)
    if (!digits_well_formed(params, pair[0]) || !digits_well_formed(params, pair[1]))
      return false;

  if (h == 0) return digest == hash_leaf(params, msg);
  if (digest != hash_pair(params, proof.pairs[0][0], proof.pairs[0][1]))
    return false;
  for (uint32_t j = 1; j < h; j++) {
    unsigned b = (proof.index >> (h - j)) & 1;
    if (g_inverse(params, proof.pairs[j - 1][b]) !=
        hash_pair(params, proof.pairs[j][0], proof.pairs[j][1]))
      return false;
  }
  unsigned bh = proof.index & 1;
  return g_inverse(params, proof.pairs[h - 1][bh]) == hash_leaf(params, msg);
}

Digits node_update(const Params& params, const Digits& node, uint32_t height,
                   uint64_t index, uint32_t j, uint32_t old_msg,
                   uint32_t new_msg) {
  if (node.size() != params.d)
    throw std::invalid_argument("digit vector length mismatch");
  Digits add = chain(params, height, index, j, new_msg);
  Digits sub = chain(params, height, index, j, old_msg);
  Digits out(params.d);
  for (uint32_t t = 0; t < params.d; t++)
    out[t] = uint32_t((uint64_t(node[t]) + add[t] + params.q - sub[t]) % params.q);
  return out;
}

void save_params(const Params& params, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open params file for writing: " + path);
  out.write(kMagic, 8);
  out.put(char(uint8_t(params.k_dim)));
  out.put(char(uint8_t(params.k_dim >> 8)));
  for (int i = 0; i < 4; i++) out.put(char(uint8_t(params.q >> (8 * i))));
  for (uint32_t e : params.m)
    for (int i = 0; i < 4; i++) out.put(char(uint8_t(e >> (8 * i))));
  if (!out) throw std::runtime_error("params write failed: " + path);
}

std::optional<Params> load_params(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  uint8_t kb[2], qb[4];
  if (!in.read(reinterpret_cast<char*>(kb), 2)) return std::nullopt;
  if (!in.read(reinterpret_cast<char*>(qb), 4)) return std::nullopt;
  Params p;
  p.k_dim = uint32_t(kb[0]) | uint32_t(kb[1]) << 8;
  p.q = uint32_t(qb[0]) | uint32_t(qb[1]) << 8 | uint32_t(qb[2]) << 16 |
        uint32_t(qb[3]) << 24;
  if (p.k_dim == 0 || p.k_dim > 64 || p.q < 2 || p.q > (1u << 24))
    return std::nullopt;
  p.log_q = ceil_log2(p.q);
  p.d = p.k_dim * p.log_q;
  p.m.resize(size_t(p.k_dim) * 2 * p.d);
  for (auto& e : p.m) {
    uint8_t eb[4];
    if (!in.read(reinterpret_cast<char*>(eb), 4)) return std::nullopt;
    e = uint32_t(eb[0]) | uint32_t(eb[1]) << 8 | uint32_t(eb[2]) << 16 |
        uint32_t(eb[3]) << 24;
    if (e >= p.q) return std::nullopt;
  }
  char extra;
  if (in.read(&extra, 1)) return std::nullopt;
  return p;
}

}  // namespace svc::lat
