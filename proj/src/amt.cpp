#include "svc/amt.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace svc::amt {

namespace {

constexpr char kMagic[8] = {'S', 'V', 'C', 'A', 'M', 'T', '0', '1'};

bool power_of_two(uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

uint32_t log2_exact(uint64_t n) {
  uint32_t h = 0;
  while ((uint64_t(1) << h) < n) h++;
  return h;
}

NodePath prefix_path(uint64_t index, uint32_t height, uint32_t depth) {
  return NodePath{uint8_t(depth), depth ? index >> (height - depth) : 0};
}

uint32_t common_prefix_bits(uint64_t a, uint64_t b, uint32_t height) {
  uint32_t cpl = 0;
  while (cpl < height &&
         (a >> (height - 1 - cpl) & 1) == (b >> (height - 1 - cpl) & 1))
    cpl++;
  return cpl;
}

}  // namespace

std::pair<uint64_t, uint64_t> range(const NodePath& p, uint32_t height) {
  if (p.depth > height) throw std::invalid_argument("path deeper than the tree");
  uint64_t size = uint64_t(1) << (height - p.depth);
  return {p.bits * size, (p.bits + 1) * size};
}

Params::Params(Srs srs, uint32_t n) : srs_(std::move(srs)), n_(n) {
  if (!power_of_two(n)) throw std::invalid_argument("leaf count must be a power of two");
  height_ = log2_exact(n);
  if (!srs_.tau)
    throw std::invalid_argument(
        "parameter generation needs the secret evaluation point; "
        "use a setup that retains it");
  if (srs_.degree < n_) throw std::invalid_argument("srs degree below leaf count");
  init_tables();
  basis_.resize(n_);
}

void Params::init_tables() {
  const Fr tau = *srs_.tau;
  prefix_.resize(n_ + 1);
  prefix_inv_.resize(n_ + 1);
  diff_inv_.resize(n_);
  fact_inv_.resize(n_);
  prefix_[0] = Fr::one();
  std::vector<Fr> diff(n_);
  for (uint32_t j = 0; j < n_; j++) {
    diff[j] = tau - Fr::from_u64(j);
    if (diff[j] == Fr::zero())
      throw std::runtime_error("secret evaluation point hits the domain");
    prefix_[j + 1] = prefix_[j] * diff[j];
  }
  // One inversion unwinds every prefix product and pairwise difference.
  prefix_inv_[n_] = prefix_[n_].inv();
  for (uint32_t j = n_; j-- > 0;) {
    prefix_inv_[j] = prefix_inv_[j + 1] * diff[j];
    diff_inv_[j] = prefix_inv_[j + 1] * prefix_[j];
  }
  Fr fact = Fr::one();
  for (uint32_t t = 1; t < n_; t++) fact = fact * Fr::from_u64(t);
  fact_inv_[n_ - 1] = fact.inv();
  for (uint32_t t = n_ - 1; t-- > 0;)
    fact_inv_[t] = fact_inv_[t + 1] * Fr::from_u64(t + 1);
  gtable_ = FixedBaseTable(G1::generator().to_affine());
}

Fr Params::vanishing_at_secret(uint64_t lo, uint64_t hi) const {
  return prefix_[hi] * prefix_inv_[lo];
}

Fr Params::unit_remainder_at_secret(uint64_t i, uint64_t lo, uint64_t hi) const {
  if (i < lo || i >= hi) return Fr::zero();
  Fr num = prefix_[hi] * prefix_inv_[lo] * diff_inv_[i];
  Fr w = fact_inv_[i - lo] * fact_inv_[hi - 1 - i];
  if ((hi - 1 - i) & 1) w = -w;
  return num * w;
}

Fr Params::remainder_at_secret(const std::vector<Fr>& messages, uint64_t lo,
                               uint64_t hi) const {
  Fr acc = Fr::zero();
  for (uint64_t i = lo; i < hi; i++) {
    if (messages[i] == Fr::zero()) continue;
    acc = acc + messages[i] * unit_remainder_at_secret(i, lo, hi);
  }
  return acc;
}

const std::vector<std::pair<NodePath, G1Aff>>& Params::basis_nodes(uint64_t i) const {
  if (i >= n_) throw std::out_of_range("basis index out of range");
  if (basis_[i]) return *basis_[i];
  if (loaded_) {
    basis_[i].emplace();  // absent in the file: all-identity basis tree
    return *basis_[i];
  }
  std::vector<std::pair<NodePath, G1Aff>> list;
  std::vector<G1> jac;
  std::vector<NodePath> paths;
  for (uint32_t d = 1; d <= height_; d++) {
    NodePath parent = prefix_path(i, height_, d - 1);
    auto [plo, phi] = range(parent, height_);
    Fr rp = unit_remainder_at_secret(i, plo, phi);
    for (unsigned c = 0; c < 2; c++) {
      NodePath child = parent.child(c);
      auto [lo, hi] = range(child, height_);
      Fr rn = unit_remainder_at_secret(i, lo, hi);
      // Inverse of the vanishing value is a prefix-product swap.
      Fr q = (rp - rn) * (prefix_[lo] * prefix_inv_[hi]);
      if (q == Fr::zero()) continue;
      paths.push_back(child);
      jac.push_back(gtable_.mul(q));
    }
  }
  auto aff = batch_to_affine(jac);
  for (size_t t = 0; t < aff.size(); t++) list.emplace_back(paths[t], aff[t]);
  basis_[i] = std::move(list);
  return *basis_[i];
}

const G1Aff* Params::basis_node(uint64_t i, const NodePath& p) const {
  for (const auto& [path, value] : basis_nodes(i))
    if (path == p) return &value;
  return nullptr;
}

G2Aff Params::vanishing_g2(const NodePath& p) const {
  auto key = std::make_pair(p.depth, p.bits);
  auto it = vcache_.find(key);
  if (it != vcache_.end()) return it->second;
  if (loaded_)
    throw std::out_of_range("vanishing commitment missing from loaded parameters");
  auto [lo, hi] = range(p, height_);
  G2Aff v = G2::generator().mul(vanishing_at_secret(lo, hi)).to_affine();
  vcache_.emplace(key, v);
  return v;
}

G1Aff Params::basis_commitment(uint64_t i) const {
  if (i >= n_) throw std::out_of_range("basis index out of range");
  if (loaded_)
    throw std::out_of_range("basis commitments unavailable in loaded parameters");
  return gtable_.mul(unit_remainder_at_secret(i, 0, n_)).to_affine();
}

namespace {

// Honest build: recursive polynomial division from the interpolant down.
void build_by_division(Tree& t, const Srs& srs, uint32_t depth, uint64_t idx,
                       const Poly& r_parent) {
  auto [lo, hi] = range(NodePath{uint8_t(depth), idx}, t.height);
  std::vector<Fr> pts;
  for (uint64_t j = lo; j < hi; j++) pts.push_back(Fr::from_u64(j));
  auto [q, r] = divide(r_parent, vanishing(pts));
  t.nodes[depth][idx] = commit_poly(srs, q);
  if (depth < t.height) {
    build_by_division(t, srs, depth + 1, 2 * idx, r);
    build_by_division(t, srs, depth + 1, 2 * idx + 1, r);
  }
}

}  // namespace

Tree build(const std::vector<Fr>& messages, const Srs& srs, const Params& params) {
  if (messages.size() != params.n())
    throw std::invalid_argument("message count does not match the parameters");
  if (srs.degree < params.n())
    throw std::invalid_argument("srs degree below leaf count");
  uint32_t h = params.height();

  Tree t;
  t.height = h;
  t.messages = messages;
  t.nodes.resize(h + 1);
  for (uint32_t d = 0; d <= h; d++) t.nodes[d].resize(uint64_t(1) << d);

  bool fast = srs.tau && params.srs().tau && *srs.tau == *params.srs().tau;
  if (fast) {
    // Remainder evaluations per level, then one fixed-base mul per node.
    std::vector<std::vector<Fr>> rvals(h + 1);
    for (uint32_t d = 0; d <= h; d++) {
      rvals[d].resize(uint64_t(1) << d);
      for (uint64_t idx = 0; idx < rvals[d].size(); idx++) {
        auto [lo, hi] = range(NodePath{uint8_t(d), idx}, h);
        rvals[d][idx] = params.remainder_at_secret(messages, lo, hi);
      }
    }
    std::vector<G1> jac;
    jac.reserve((uint64_t(2) << h) - 1);
    for (uint32_t d = 0; d <= h; d++)
      for (uint64_t idx = 0; idx < rvals[d].size(); idx++) {
        if (d == 0) {
          jac.push_back(G1::identity());
          continue;
        }
        auto [lo, hi] = range(NodePath{uint8_t(d), idx}, h);
        Fr q = (rvals[d - 1][idx >> 1] - rvals[d][idx]) *
               params.vanishing_at_secret(lo, hi).inv();
        jac.push_back(params.fixed_base_mul(q));
      }
    auto aff = batch_to_affine(jac);
    size_t pos = 0;
    for (uint32_t d = 0; d <= h; d++)
      for (uint64_t idx = 0; idx < t.nodes[d].size(); idx++)
        t.nodes[d][idx] = aff[pos++];
    t.vc = params.fixed_base_mul(rvals[0][0]).to_affine();
    return t;
  }

  std::vector<Fr> xs;
  for (uint64_t j = 0; j < params.n(); j++) xs.push_back(Fr::from_u64(j));
  Poly phi = interpolate(xs, messages);
  build_by_division(t, srs, 0, 0, phi);
  t.vc = commit_poly(srs, phi);
  return t;
}

Proof open(const Tree& tree, uint64_t index) {
  if (index >= (uint64_t(1) << tree.height))
    throw std::out_of_range("leaf index out of range");
  Proof p;
  p.n = uint32_t(1) << tree.height;
  p.index = index;
  for (uint32_t d = 0; d <= tree.height; d++)
    p.path.push_back(tree.nodes[d][prefix_path(index, tree.height, d).bits]);
  return p;
}

bool verify(const G1Aff& vc, const Fr& message, const Proof& proof,
            const Params& params) {
  if (proof.n != params.n() || proof.index >= params.n()) return false;
  if (proof.path.size() != size_t(params.height()) + 1) return false;
  std::vector<std::pair<G1Aff, G2Aff>> pairs;
  // e(g^m / C, g2) * prod_j e(u_j, [V_j]) == 1
  G1Aff lhs = G1::generator()
                  .mul(message)
                  .add(G1::from_affine(vc).neg())
                  .to_affine();
  pairs.emplace_back(lhs, G2::generator().to_affine());
  for (uint32_t d = 0; d <= params.height(); d++)
    pairs.emplace_back(proof.path[d],
                       params.vanishing_g2(prefix_path(proof.index, params.height(), d)));
  return pairing_product_is_one(pairs);
}

G1Aff partial_digest(const Params& params, uint64_t i, uint32_t depth,
                     std::optional<unsigned> child_bit, const Fr& delta) {
  if (i >= params.n()) throw std::invalid_argument("basis index out of range");
  if (depth > params.height()) throw std::invalid_argument("depth out of range");
  if ((depth == 0) == child_bit.has_value())
    throw std::invalid_argument("child bit must accompany exactly the non-root depths");
  if (depth == 0) return G1Aff::identity();
  if (*child_bit > 1) throw std::invalid_argument("child bit must be 0 or 1");
  NodePath node =
      prefix_path(i, params.height(), depth - 1).child(*child_bit);
  const G1Aff* u = params.basis_node(i, node);
  if (!u) return G1Aff::identity();
  return G1::from_affine(*u).mul(delta).to_affine();
}

NoInfoOutcome proof_update_no_info(const Proof& proof, const ScalarBatch& batch,
                                   const Params& params) {
  validate_scalar_batch(batch, params.n());
  NoInfoOutcome out;
  out.proof = proof;
  uint32_t h = params.height();
  std::vector<G1> acc;
  acc.reserve(proof.path.size());
  for (const auto& p : proof.path) acc.push_back(G1::from_affine(p));
  for (const auto& d : batch) {
    Fr delta = d.new_value - d.old_value;
    if (delta == Fr::zero()) continue;
    uint32_t cpl = common_prefix_bits(proof.index, d.index, h);
    for (uint32_t t = 1; t <= std::min(cpl + 1, h); t++) {
      const G1Aff* u = params.basis_node(d.index, prefix_path(proof.index, h, t));
      if (!u) continue;
      acc[t] = acc[t].add(G1::from_affine(*u).mul(delta));
      out.g1_exps++;
    }
  }
  out.proof.path = batch_to_affine(acc);
  return out;
}

namespace {

void write_path(std::ofstream& out, const NodePath& p) {
  out.put(char(p.depth));
  unsigned nbytes = (unsigned(p.depth) + 7) / 8;
  uint64_t shifted = p.depth ? p.bits << (8 * nbytes - p.depth) : 0;
  for (unsigned i = 0; i < nbytes; i++)
    out.put(char(uint8_t(shifted >> (8 * (nbytes - 1 - i)))));
}

bool read_path(std::ifstream& in, NodePath& p) {
  int depth = in.get();
  if (depth < 0 || depth > 64) return false;
  unsigned nbytes = (unsigned(depth) + 7) / 8;
  uint64_t packed = 0;
  for (unsigned i = 0; i < nbytes; i++) {
    int b = in.get();
    if (b < 0) return false;
    packed = packed << 8 | unsigned(b);
  }
  unsigned pad = 8 * nbytes - unsigned(depth);
  if (depth && (packed & ((uint64_t(1) << pad) - 1))) return false;
  p.depth = uint8_t(depth);
  p.bits = depth ? packed >> pad : 0;
  return true;
}

}  // namespace

void save_params(const Params& params, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open params file for writing: " + path);
  out.write(kMagic, 8);
  uint32_t n = params.n();
  for (int i = 0; i < 4; i++) out.put(char(uint8_t(n >> (8 * i))));
  for (uint64_t i = 0; i < n; i++) {
    const auto& list = params.basis_nodes(i);
    uint16_t count = uint16_t(list.size());
    out.put(char(uint8_t(count)));
    out.put(char(uint8_t(count >> 8)));
    for (const auto& [p, value] : list) {
      write_path(out, p);
      auto enc = g1_compress(value);
      out.write(reinterpret_cast<const char*>(enc.data()), enc.size());
    }
  }
  for (uint32_t d = 0; d <= params.height(); d++)
    for (uint64_t idx = 0; idx < (uint64_t(1) << d); idx++) {
      auto enc = g2_compress(params.vanishing_g2(NodePath{uint8_t(d), idx}));
      out.write(reinterpret_cast<const char*>(enc.data()), enc.size());
    }
  if (!out) throw std::runtime_error("params write failed: " + path);
}

std::optional<Params> load_params(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  uint8_t nb[4];
  if (!in.read(reinterpret_cast<char*>(nb), 4)) return std::nullopt;
  uint32_t n = uint32_t(nb[0]) | uint32_t(nb[1]) << 8 | uint32_t(nb[2]) << 16 |
               uint32_t(nb[3]) << 24;
  if (!power_of_two(n) || n > (1u << 24)) return std::nullopt;

  Params params;
  params.n_ = n;
  params.height_ = log2_exact(n);
  params.loaded_ = true;
  params.basis_.resize(n);
  for (uint64_t i = 0; i < n; i++) {
    uint8_t cb[2];
    if (!in.read(reinterpret_cast<char*>(cb), 2)) return std::nullopt;
    uint16_t count = uint16_t(cb[0]) | uint16_t(cb[1]) << 8;
    if (count > 2 * params.height_ + 1) return std::nullopt;
    std::vector<std::pair<NodePath, G1Aff>> list;
    for (uint16_t k = 0; k < count; k++) {
      NodePath p;
      if (!read_path(in, p)) return std::nullopt;
      std::array<uint8_t, G1_BYTES> enc;
      if (!in.read(reinterpret_cast<char*>(enc.data()), enc.size()))
        return std::nullopt;
      auto value = g1_decompress(enc.data());
      if (!value) return std::nullopt;
      if (!list.empty() && !(list.back().first < p)) return std::nullopt;
      list.emplace_back(p, *value);
    }
    params.basis_[i] = std::move(list);
  }
  for (uint32_t d = 0; d <= params.height_; d++)
    for (uint64_t idx = 0; idx < (uint64_t(1) << d); idx++) {
      std::array<uint8_t, G2_BYTES> enc;
      if (!in.read(reinterpret_cast<char*>(enc.data()), enc.size()))
        return std::nullopt;
      auto value = g2_decompress(enc.data());
      if (!value) return std::nullopt;
      params.vcache_.emplace(std::make_pair(uint8_t(d), idx), *value);
    }
  char extra;
  if (in.read(&extra, 1)) return std::nullopt;
  return params;
}

}  // namespace svc::amt
