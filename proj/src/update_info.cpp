#include "svc/update_info.hpp"

#include <algorithm>
#include <cstring>

namespace svc {

namespace {

constexpr char kMagic[8] = {'S', 'V', 'C', 'U', 'P', 'D', '0', '1'};

bool known_backend(uint8_t b) {
  return b >= uint8_t(BackendId::merkle) && b <= uint8_t(BackendId::verkle);
}

}  // namespace

void UpdateInfo::sort_canonical() {
  std::sort(entries.begin(), entries.end(),
            [](const UpdateEntry& a, const UpdateEntry& b) { return a.path < b.path; });
}

const std::vector<uint8_t>* UpdateInfo::find(const NodePath& p) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), p,
      [](const UpdateEntry& e, const NodePath& q) { return e.path < q; });
  if (it == entries.end() || !(it->path == p)) return nullptr;
  return &it->value;
}

std::vector<uint8_t> UpdateInfo::encode() const {
  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 8);
  out.push_back(uint8_t(backend));
  out.push_back(height);
  uint32_t n = uint32_t(entries.size());
  for (int i = 0; i < 4; i++) out.push_back(uint8_t(n >> (8 * i)));
  for (const auto& e : entries) {
    out.push_back(e.path.depth);
    unsigned nbytes = (unsigned(e.path.depth) + 7) / 8;
    // Left-align the path bits so b1 lands in the top bit of the first byte.
    uint64_t shifted = e.path.depth
                           ? e.path.bits << (8 * nbytes - e.path.depth)
                           : 0;
    for (unsigned i = 0; i < nbytes; i++)
      out.push_back(uint8_t(shifted >> (8 * (nbytes - 1 - i))));
    uint16_t len = uint16_t(e.value.size());
    out.push_back(uint8_t(len));
    out.push_back(uint8_t(len >> 8));
    out.insert(out.end(), e.value.begin(), e.value.end());
  }
  return out;
}

std::optional<UpdateInfo> UpdateInfo::decode(const std::vector<uint8_t>& bytes) {
  size_t pos = 0;
  auto need = [&](size_t n) { return pos + n <= bytes.size(); };
  if (!need(14) || std::memcmp(bytes.data(), kMagic, 8) != 0) return std::nullopt;
  pos = 8;
  uint8_t backend = bytes[pos++];
  if (!known_backend(backend)) return std::nullopt;
  UpdateInfo info;
  info.backend = BackendId(backend);
  info.height = bytes[pos++];
  uint32_t n = 0;
  for (int i = 0; i < 4; i++) n |= uint32_t(bytes[pos++]) << (8 * i);
  info.entries.reserve(n);
  for (uint32_t k = 0; k < n; k++) {
    if (!need(1)) return std::nullopt;
    uint8_t depth = bytes[pos++];
    if (depth > 64) return std::nullopt;
    unsigned nbytes = (unsigned(depth) + 7) / 8;
    if (!need(nbytes + 2)) return std::nullopt;
    uint64_t packed = 0;
    for (unsigned i = 0; i < nbytes; i++) packed = packed << 8 | bytes[pos++];
    unsigned pad = 8 * nbytes - depth;
    if (depth && (packed & ((uint64_t(1) << pad) - 1))) return std::nullopt;
    UpdateEntry e;
    e.path.depth = depth;
    e.path.bits = depth ? packed >> pad : 0;
    uint16_t len = uint16_t(bytes[pos]) | uint16_t(bytes[pos + 1]) << 8;
    pos += 2;
    if (!need(len)) return std::nullopt;
    e.value.assign(bytes.begin() + long(pos), bytes.begin() + long(pos + len));
    pos += len;
    if (k > 0 && !(info.entries.back().path < e.path)) return std::nullopt;
    info.entries.push_back(std::move(e));
  }
  if (pos != bytes.size()) return std::nullopt;
  return info;
}

}  // namespace svc
