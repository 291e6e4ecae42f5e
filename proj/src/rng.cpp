#include "svc/rng.hpp"

#include <cstring>

#include "svc/sha256.hpp"

namespace svc {

void DeterministicRng::fill(uint8_t* out, size_t n) {
  while (n > 0) {
    if (pos_ == buf_.size()) {
      uint8_t block[24];
      std::memcpy(block, "SVCRNG01", 8);
      for (int i = 0; i < 8; ++i) block[8 + i] = (uint8_t)(seed_ >> (8 * i));
      for (int i = 0; i < 8; ++i) block[16 + i] = (uint8_t)(block_ >> (8 * i));
      Hash32 h = sha256(block, sizeof(block));
      buf_.assign(h.begin(), h.end());
      pos_ = 0;
      ++block_;
    }
    size_t take = std::min(n, buf_.size() - pos_);
    std::memcpy(out, buf_.data() + pos_, take);
    pos_ += take;
    out += take;
    n -= take;
  }
}

u64 DeterministicRng::next_u64() {
  uint8_t b[8];
  fill(b, 8);
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= (u64)b[i] << (8 * i);
  return v;
}

Fr DeterministicRng::next_fr() {
  uint8_t b[64];
  fill(b, 64);
  // value = hi * 2^256 + lo, all big-endian
  static const Fr two_256 = Fr::from_raw(Fr::R1);
  Fr hi = Fr::from_bytes_reduce(b);
  Fr lo = Fr::from_bytes_reduce(b + 32);
  return hi * two_256 + lo;
}

u64 DeterministicRng::next_index(u64 bound) { return next_u64() % bound; }

}  // namespace svc
