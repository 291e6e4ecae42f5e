#pragma once

#include <cstdint>
#include <vector>

#include "svc/ec.hpp"

namespace svc {

// Multi-scalar multiplication sum_i scalars[i] * points[i] (bucket method).
G1 msm_g1(const std::vector<G1Aff>& points, const std::vector<Fr>& scalars);

// Windowed fixed-base exponentiation table for one base point.
// Precomputes b * (256^w * base) for every window w and byte value b, so a
// scalar multiplication costs at most 32 mixed additions.
class FixedBaseTable {
 public:
  explicit FixedBaseTable(const G1Aff& base);
  G1 mul(const Fr& scalar) const;

 private:
  static constexpr size_t kWindows = 32;  // 256-bit scalars, 8-bit windows
  std::vector<G1Aff> table_;              // kWindows * 255 entries
};

}  // namespace svc
