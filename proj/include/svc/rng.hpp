#pragma once
// Seeded deterministic byte stream (SHA-256 counter construction) used for
// reproducible setups, test batches, and tamper trials.  The stream is
// "SVCRNG01" || LE64(seed) || LE64(block) hashed per 32-byte block.

#include <cstdint>
#include <vector>

#include "svc/fields.hpp"

namespace svc {

class DeterministicRng {
 public:
  explicit DeterministicRng(u64 seed) : seed_(seed) {}

  void fill(uint8_t* out, size_t n);

  u64 next_u64();

  // 64 stream bytes interpreted as a big-endian integer, reduced mod r
  Fr next_fr();

  // modulo bias is fine for workloads; not used for secrets
  u64 next_index(u64 bound);

 private:
  u64 seed_;
  u64 block_ = 0;
  std::vector<uint8_t> buf_;
  size_t pos_ = 0;
};

}  // namespace svc
