#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "svc/fields.hpp"

namespace svc {

// One batched message change. Proof holders are stateless and receive the
// batch itself, so both old and new values travel with it.
struct ScalarDelta {
  uint64_t index = 0;
  Fr old_value;
  Fr new_value;
};
using ScalarBatch = std::vector<ScalarDelta>;

// Throws std::invalid_argument on duplicate or out-of-range indices.
inline void validate_scalar_batch(const ScalarBatch& batch, uint64_t n) {
  std::unordered_set<uint64_t> seen;
  for (const auto& d : batch) {
    if (d.index >= n) throw std::invalid_argument("update index out of range");
    if (!seen.insert(d.index).second)
      throw std::invalid_argument("duplicate index in update batch");
  }
}

}  // namespace svc
