#pragma once
// Thin wrapper over the system crypto library's SHA-256.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace svc {

using Hash32 = std::array<uint8_t, 32>;

Hash32 sha256(const uint8_t* data, size_t len);

inline Hash32 sha256(const std::vector<uint8_t>& v) {
  return sha256(v.data(), v.size());
}

class Sha256 {
 public:
  Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  ~Sha256();

  void append(const uint8_t* data, size_t len);
  void append(const Hash32& h) { append(h.data(), h.size()); }
  void append(const std::vector<uint8_t>& v) { append(v.data(), v.size()); }
  Hash32 finish();

 private:
  void* ctx_;
};

}  // namespace svc
