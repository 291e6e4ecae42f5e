#include "svc/sublinear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace svc::sub {

namespace {

constexpr double kRelTol = 1e-12;

void check_nu(double nu) {
  if (!(nu >= 0.0 && nu <= 1.0))
    throw std::invalid_argument("trade-off parameter must lie in [0, 1]");
}

NodePath watched_ancestor(NodePath p, unsigned locality) {
  while (locality-- > 0 && p.depth > 0) p = p.parent();
  return p;
}

std::vector<uint64_t> sorted_indices(const LatBatch& batch) {
  std::vector<uint64_t> idx;
  for (const auto& d : batch) idx.push_back(d.index);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<uint64_t> sorted_indices(const ScalarBatch& batch) {
  std::vector<uint64_t> idx;
  for (const auto& d : batch) idx.push_back(d.index);
  std::sort(idx.begin(), idx.end());
  return idx;
}

void validate_lat_batch(const LatBatch& batch, const lat::Tree& tree,
                        const lat::Params& params) {
  std::vector<uint64_t> idx;
  for (const auto& d : batch) {
    if (d.index >= tree.leaf_count())
      throw std::invalid_argument("update index out of range");
    if (d.new_value >= params.q || d.old_value >= params.q)
      throw std::invalid_argument("message outside the residue field");
    if (d.old_value != tree.messages[d.index])
      throw std::invalid_argument("stale old value in update batch");
    idx.push_back(d.index);
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::invalid_argument("duplicate update index");
}

std::vector<uint8_t> digits_bytes(const lat::Digits& digits) {
  std::vector<uint8_t> out;
  out.reserve(digits.size() * 4);
  for (uint32_t d : digits)
    for (int i = 0; i < 4; i++) out.push_back(uint8_t(d >> (8 * i)));
  return out;
}

lat::Digits digits_from_bytes(const std::vector<uint8_t>& bytes,
                              const lat::Params& params) {
  if (bytes.size() != size_t(params.d) * 4)
    throw std::invalid_argument("published node value has the wrong size");
  lat::Digits out(params.d);
  for (uint32_t t = 0; t < params.d; t++) {
    out[t] = uint32_t(bytes[4 * t]) | uint32_t(bytes[4 * t + 1]) << 8 |
             uint32_t(bytes[4 * t + 2]) << 16 | uint32_t(bytes[4 * t + 3]) << 24;
    if (out[t] >= params.q)
      throw std::invalid_argument("published digit exceeds the modulus");
  }
  return out;
}

void check_info_header(const UpdateInfo& info, BackendId backend,
                       uint32_t height) {
  if (info.backend != backend)
    throw std::invalid_argument("update information is for another backend");
  if (info.height != height)
    throw std::invalid_argument("update information height mismatch");
}

}  // namespace

double update_threshold(uint64_t k, double nu) {
  check_nu(nu);
  return std::pow(double(k), 1.0 - nu);
}

bool terminates(uint64_t count, uint64_t k, double nu) {
  return double(count) <= update_threshold(k, nu) * (1.0 + kRelTol);
}

uint64_t count_under(const NodePath& p, uint32_t height,
                     const std::vector<uint64_t>& sorted_indices) {
  if (p.depth > height) throw std::invalid_argument("path deeper than the tree");
  uint64_t lo = p.bits << (height - p.depth);
  uint64_t hi = lo + (uint64_t(1) << (height - p.depth));
  auto first = std::lower_bound(sorted_indices.begin(), sorted_indices.end(), lo);
  auto last = std::lower_bound(sorted_indices.begin(), sorted_indices.end(), hi);
  return uint64_t(last - first);
}

std::vector<NodePath> publish_set(uint32_t height, std::vector<uint64_t> indices,
                                  double nu, unsigned locality) {
  check_nu(nu);
  if (locality > 1) throw std::invalid_argument("unsupported locality");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  uint64_t k = indices.size();

  // Breadth-first visit yields canonical order directly.
  std::vector<NodePath> out;
  std::vector<NodePath> frontier{NodePath{0, 0}};
  while (!frontier.empty()) {
    std::vector<NodePath> next;
    for (const NodePath& node : frontier) {
      uint64_t c = count_under(watched_ancestor(node, locality), height, indices);
      if (terminates(c, k, nu)) continue;
      out.push_back(node);
      if (node.depth < height) {
        next.push_back(node.child(0));
        next.push_back(node.child(1));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool counters_ok(const Counters& c, uint64_t k, double nu, uint32_t height,
                 unsigned locality) {
  check_nu(nu);
  double scale = double(uint64_t(1) << locality);
  double pub_bound = scale * (std::pow(double(k), nu) * height + 1.0);
  double dig_bound = update_threshold(k, nu) * (height + 1.0);
  return double(c.published_nodes) <= pub_bound * (1.0 + kRelTol) &&
         double(c.digest_applications) <= dig_bound * (1.0 + kRelTol);
}

LatticeOutcome update_lattice(const lat::Tree& tree, const LatBatch& batch,
                              double nu, const lat::Params& params) {
  check_nu(nu);
  validate_lat_batch(batch, tree, params);

  LatticeOutcome out;
  out.tree = tree;
  uint32_t h = tree.height;
  // One upward chain walk per update, applied as new-minus-old entrywise.
  for (const auto& d : batch) {
    out.tree.messages[d.index] = d.new_value;
    lat::Digits cur_new =
        lat::decompose(params, lat::hash_leaf(params, d.new_value));
    lat::Digits cur_old =
        lat::decompose(params, lat::hash_leaf(params, d.old_value));
    for (uint32_t depth = h;; depth--) {
      lat::Digits& node = out.tree.levels[depth][d.index >> (h - depth)];
      for (uint32_t t = 0; t < params.d; t++)
        node[t] = uint32_t(
            (uint64_t(node[t]) + cur_new[t] + params.q - cur_old[t]) % params.q);
      if (depth == 0) break;
      unsigned c = (d.index >> (h - depth)) & 1;
      size_t offset = c ? params.d : 0;
      lat::Fq vn(params.k_dim), vo(params.k_dim);
      for (uint32_t r = 0; r < params.k_dim; r++) {
        const uint32_t* row = params.m.data() + size_t(r) * 2 * params.d + offset;
        uint64_t an = 0, ao = 0;
        for (uint32_t col = 0; col < params.d; col++) {
          an += uint64_t(row[col]) * cur_new[col];
          ao += uint64_t(row[col]) * cur_old[col];
        }
        vn[r] = uint32_t(an % params.q);
        vo[r] = uint32_t(ao % params.q);
      }
      cur_new = lat::decompose(params, vn);
      cur_old = lat::decompose(params, vo);
    }
  }
  out.digest = lat::g_inverse(params, out.tree.levels[0][0]);

  out.info.backend = BackendId::lattice;
  out.info.height = uint8_t(h);
  for (const NodePath& p : publish_set(h, sorted_indices(batch), nu, 0))
    out.info.entries.push_back({p, digits_bytes(out.tree.node(p))});
  out.info.sort_canonical();
  out.counters.published_nodes = out.info.entries.size();
  return out;
}

lat::Proof proof_update_lattice(const lat::Proof& proof, const LatBatch& batch,
                                const UpdateInfo& info, double nu,
                                const lat::Params& params, Counters* counters) {
  check_nu(nu);
  uint64_t n = proof.n;
  uint32_t h = 0;
  while ((uint64_t(1) << h) < n) h++;
  check_info_header(info, BackendId::lattice, h);
  if (proof.pairs.size() != h)
    throw std::invalid_argument("proof shape does not match its leaf count");

  lat::Proof out = proof;
  Counters local;
  for (uint32_t j = 0; j < h; j++) {
    uint64_t prefix = proof.index >> (h - 1 - j);  // path node at depth j+1
    for (unsigned side = 0; side < 2; side++) {
      NodePath v{uint8_t(j + 1), (prefix & ~uint64_t(1)) | side};
      if (const auto* value = info.find(v)) {
        out.pairs[j][side] = digits_from_bytes(*value, params);
        local.info_lookups++;
        continue;
      }
      uint64_t lo = v.bits << (h - v.depth);
      uint64_t hi = lo + (uint64_t(1) << (h - v.depth));
      for (const auto& d : batch) {
        if (d.index < lo || d.index >= hi) continue;
        out.pairs[j][side] =
            lat::node_update(params, out.pairs[j][side], h, d.index, j + 1,
                             d.old_value, d.new_value);
        local.digest_applications++;
      }
    }
  }
  if (counters) {
    counters->digest_applications = local.digest_applications;
    counters->info_lookups = local.info_lookups;
  }
  return out;
}

AmtOutcome update_amt(const amt::Tree& tree, const ScalarBatch& batch, double nu,
                      const amt::Params& params) {
  check_nu(nu);
  validate_scalar_batch(batch, uint64_t(1) << tree.height);
  for (const auto& d : batch)
    if (!(tree.messages[d.index] == d.old_value))
      throw std::invalid_argument("stale old value in update batch");

  AmtOutcome out;
  out.tree = tree;
  uint32_t h = tree.height;

  std::map<std::pair<uint8_t, uint64_t>, G1> moved;
  G1 vc_acc = G1::from_affine(tree.vc);
  for (const auto& d : batch) {
    out.tree.messages[d.index] = d.new_value;
    Fr delta = d.new_value - d.old_value;
    if (delta == Fr::zero()) continue;
    for (const auto& [p, value] : params.basis_nodes(d.index)) {
      auto key = std::make_pair(p.depth, p.bits);
      auto it = moved.find(key);
      if (it == moved.end())
        it = moved.emplace(key, G1::from_affine(out.tree.node(p))).first;
      it->second = it->second.add(G1::from_affine(value).mul(delta));
      out.g1_exps++;
    }
    vc_acc = vc_acc.add(G1::from_affine(params.basis_commitment(d.index)).mul(delta));
    out.g1_exps++;
  }
  std::vector<G1> jac;
  jac.reserve(moved.size() + 1);
  jac.push_back(vc_acc);
  for (const auto& [key, value] : moved) jac.push_back(value);
  auto aff = batch_to_affine(jac);
  out.vc = aff[0];
  size_t pos = 1;
  for (const auto& [key, value] : moved)
    out.tree.nodes[key.first][key.second] = aff[pos++];

  out.info.backend = BackendId::amt;
  out.info.height = uint8_t(h);
  for (const NodePath& p : publish_set(h, sorted_indices(batch), nu, 1)) {
    auto enc = g1_compress(out.tree.node(p));
    out.info.entries.push_back({p, std::vector<uint8_t>(enc.begin(), enc.end())});
  }
  out.info.sort_canonical();
  out.counters.published_nodes = out.info.entries.size();
  return out;
}

amt::Proof proof_update_amt(const amt::Proof& proof, const ScalarBatch& batch,
                            const UpdateInfo& info, double nu,
                            const amt::Params& params, Counters* counters) {
  check_nu(nu);
  uint32_t h = params.height();
  check_info_header(info, BackendId::amt, h);
  if (proof.n != params.n() || proof.path.size() != size_t(h) + 1)
    throw std::invalid_argument("proof shape does not match the parameters");

  amt::Proof out = proof;
  Counters local;
  for (uint32_t d = 0; d <= h; d++) {
    NodePath v{uint8_t(d), d ? proof.index >> (h - d) : 0};
    if (const auto* value = info.find(v)) {
      if (value->size() != G1_BYTES)
        throw std::invalid_argument("published node value has the wrong size");
      auto point = g1_decompress(value->data());
      if (!point) throw std::invalid_argument("published node value malformed");
      out.path[d] = *point;
      local.info_lookups++;
      continue;
    }
    if (d == 0) continue;  // the root quotient is identically zero
    G1 acc = G1::from_affine(out.path[d]);
    bool touched = false;
    for (const auto& upd : batch) {
      // The node moves only for updates under its parent.
      if (upd.index >> (h - d + 1) != proof.index >> (h - d + 1)) continue;
      Fr delta = upd.new_value - upd.old_value;
      if (delta == Fr::zero()) continue;
      const G1Aff* u = params.basis_node(upd.index, v);
      if (!u) continue;
      acc = acc.add(G1::from_affine(*u).mul(delta));
      local.digest_applications++;
      touched = true;
    }
    if (touched) out.path[d] = acc.to_affine();
  }
  if (counters) {
    counters->digest_applications = local.digest_applications;
    counters->info_lookups = local.info_lookups;
  }
  return out;
}

}  // namespace svc::sub
