#include "svc/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace svc {

Hash32 sha256(const uint8_t* data, size_t len) {
  Hash32 out{};
  unsigned int n = 0;
  if (!EVP_Digest(data, len, out.data(), &n, EVP_sha256(), nullptr) || n != 32)
    throw std::runtime_error("sha256 failed");
  return out;
}

Sha256::Sha256() {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || !EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 init failed");
  ctx_ = ctx;
}

Sha256::~Sha256() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

void Sha256::append(const uint8_t* data, size_t len) {
  if (!EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data, len))
    throw std::runtime_error("sha256 update failed");
}

Hash32 Sha256::finish() {
  Hash32 out{};
  unsigned int n = 0;
  if (!EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), out.data(), &n) ||
      n != 32)
    throw std::runtime_error("sha256 final failed");
  return out;
}

}  // namespace svc
