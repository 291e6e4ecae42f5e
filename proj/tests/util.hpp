#pragma once
// Small helpers shared by the test files.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace testutil {

inline std::vector<uint8_t> from_hex(std::string_view s) {
  auto nib = [](char c) -> uint8_t {
    if (c >= '0' && c <= '9') return (uint8_t)(c - '0');
    if (c >= 'a' && c <= 'f') return (uint8_t)(c - 'a' + 10);
    return (uint8_t)(c - 'A' + 10);
  };
  std::vector<uint8_t> out(s.size() / 2);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = (uint8_t)((nib(s[2 * i]) << 4) | nib(s[2 * i + 1]));
  return out;
}

inline std::string to_hex(const uint8_t* d, size_t n) {
  static const char* digits = "0123456789abcdef";
  std::string s(2 * n, '0');
  for (size_t i = 0; i < n; ++i) {
    s[2 * i] = digits[d[i] >> 4];
    s[2 * i + 1] = digits[d[i] & 0xF];
  }
  return s;
}

template <class Arr>
std::string to_hex(const Arr& a) {
  return to_hex(a.data(), a.size());
}

}  // namespace testutil
