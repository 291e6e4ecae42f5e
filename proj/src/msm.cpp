#include "svc/msm.hpp"

#include <stdexcept>

namespace svc {

namespace {

inline unsigned window_bits(size_t n) {
  if (n < 8) return 2;
  if (n < 32) return 3;
  if (n < 256) return 5;
  if (n < 4096) return 7;
  if (n < 65536) return 9;
  return 11;
}

inline unsigned scalar_window(const limb::Arr<4>& raw, unsigned bit, unsigned width) {
  // Extract `width` bits starting at `bit` (little-endian bit order).
  unsigned limb_idx = bit / 64, off = bit % 64;
  uint64_t v = raw[limb_idx] >> off;
  if (off + width > 64 && limb_idx + 1 < 4) v |= raw[limb_idx + 1] << (64 - off);
  return unsigned(v & ((1u << width) - 1));
}

}  // namespace

G1 msm_g1(const std::vector<G1Aff>& points, const std::vector<Fr>& scalars) {
  if (points.size() != scalars.size())
    throw std::invalid_argument("msm size mismatch");
  size_t n = points.size();
  if (n == 0) return G1::identity();

  unsigned c = window_bits(n);
  std::vector<limb::Arr<4>> raw(n);
  for (size_t i = 0; i < n; i++) raw[i] = scalars[i].to_raw();

  G1 acc = G1::identity();
  std::vector<G1> buckets((size_t(1) << c) - 1);
  for (int start = int(256 / c) * int(c); start >= 0; start -= int(c)) {
    unsigned width = std::min<unsigned>(c, 256 - unsigned(start));
    if (start != int(256 / c) * int(c))
      for (unsigned i = 0; i < c; i++) acc = acc.dbl();
    if (width == 0) continue;
    for (auto& b : buckets) b = G1::identity();
    for (size_t i = 0; i < n; i++) {
      unsigned idx = scalar_window(raw[i], unsigned(start), width);
      if (idx) buckets[idx - 1] = buckets[idx - 1].add_affine(points[i]);
    }
    G1 running = G1::identity(), sum = G1::identity();
    for (size_t b = (size_t(1) << width) - 1; b >= 1; b--) {
      running = running.add(buckets[b - 1]);
      sum = sum.add(running);
    }
    acc = acc.add(sum);
  }
  return acc;
}

FixedBaseTable::FixedBaseTable(const G1Aff& base) {
  table_.reserve(kWindows * 255);
  std::vector<G1> jac;
  jac.reserve(kWindows * 255);
  G1Aff cur = base;
  for (size_t w = 0; w < kWindows; w++) {
    G1 acc = G1::from_affine(cur);
    for (unsigned b = 1; b <= 255; b++) {
      jac.push_back(acc);
      acc = acc.add_affine(cur);
    }
    cur = acc.to_affine();  // 256 * previous window base
  }
  table_ = batch_to_affine(jac);
}

G1 FixedBaseTable::mul(const Fr& scalar) const {
  auto raw = scalar.to_raw();
  G1 acc = G1::identity();
  for (size_t w = 0; w < kWindows; w++) {
    unsigned byte = unsigned((raw[w / 8] >> (8 * (w % 8))) & 0xff);
    if (byte) acc = acc.add_affine(table_[w * 255 + byte - 1]);
  }
  return acc;
}

}  // namespace svc
