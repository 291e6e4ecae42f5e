#include "svc/ec.hpp"

namespace svc {

const G1Aff& G1Curve::gen() {
  static const G1Aff g = [] {
    G1Aff a;
    a.x = Fp::from_hex(
        "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac58"
        "6c55e83ff97a1aeffb3af00adb22c6bb");
    a.y = Fp::from_hex(
        "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3ed"
        "d03cc744a2888ae40caa232946c5e7e1");
    a.inf = false;
    return a;
  }();
  return g;
}

const G2Aff& G2Curve::gen() {
  static const G2Aff g = [] {
    G2Aff a;
    a.x.c0 = Fp::from_hex(
        "024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d177"
        "0bac0326a805bbefd48056c8c121bdb8");
    a.x.c1 = Fp::from_hex(
        "13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049"
        "334cf11213945d57e5ac7d055d042b7e");
    a.y.c0 = Fp::from_hex(
        "0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c"
        "923ac9cc3baca289e193548608b82801");
    a.y.c1 = Fp::from_hex(
        "0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab"
        "3f370d275cec1da1aaa9075ff05f79be");
    a.inf = false;
    return a;
  }();
  return g;
}

namespace {

bool fp_is_larger_half(const Fp& y) { return y.raw_gt(-y); }

bool fp2_is_larger_half(const Fp2& y) {
  Fp2 n = -y;
  if (!(y.c1 == n.c1)) return y.c1.raw_gt(n.c1);
  return y.c0.raw_gt(n.c0);
}

}  // namespace

std::array<uint8_t, G1_BYTES> g1_compress(const G1Aff& p) {
  std::array<uint8_t, G1_BYTES> out{};
  if (p.inf) {
    out[0] = 0xC0;
    return out;
  }
  p.x.to_bytes_be(out.data());
  out[0] |= 0x80 | (fp_is_larger_half(p.y) ? 0x20 : 0x00);
  return out;
}

std::array<uint8_t, G2_BYTES> g2_compress(const G2Aff& p) {
  std::array<uint8_t, G2_BYTES> out{};
  if (p.inf) {
    out[0] = 0xC0;
    return out;
  }
  p.x.c1.to_bytes_be(out.data());
  p.x.c0.to_bytes_be(out.data() + 48);
  out[0] |= 0x80 | (fp2_is_larger_half(p.y) ? 0x20 : 0x00);
  return out;
}

std::array<uint8_t, G1_BYTES> g1_compress(const G1& p) {
  return g1_compress(p.to_affine());
}

std::array<uint8_t, G2_BYTES> g2_compress(const G2& p) {
  return g2_compress(p.to_affine());
}

std::optional<G1Aff> g1_decompress(const uint8_t* b, bool subgroup_check) {
  uint8_t flags = b[0] & 0xE0;
  if (!(flags & 0x80)) return std::nullopt;  // only compressed form accepted
  if (flags & 0x40) {
    if ((b[0] & 0x1F) != 0) return std::nullopt;
    for (size_t i = 1; i < G1_BYTES; ++i)
      if (b[i]) return std::nullopt;
    return G1Aff::identity();
  }
  std::array<uint8_t, G1_BYTES> buf{};
  for (size_t i = 0; i < G1_BYTES; ++i) buf[i] = b[i];
  buf[0] &= 0x1F;
  auto x = Fp::from_bytes_be(buf.data());
  if (!x) return std::nullopt;
  auto y = (x->square() * *x + G1Curve::b()).sqrt();
  if (!y) return std::nullopt;
  Fp yy = *y;
  if (fp_is_larger_half(yy) != !!(flags & 0x20)) yy = -yy;
  G1Aff a;
  a.x = *x;
  a.y = yy;
  a.inf = false;
  if (subgroup_check && !G1::from_affine(a).in_subgroup()) return std::nullopt;
  return a;
}

std::optional<G2Aff> g2_decompress(const uint8_t* b, bool subgroup_check) {
  uint8_t flags = b[0] & 0xE0;
  if (!(flags & 0x80)) return std::nullopt;
  if (flags & 0x40) {
    if ((b[0] & 0x1F) != 0) return std::nullopt;
    for (size_t i = 1; i < G2_BYTES; ++i)
      if (b[i]) return std::nullopt;
    return G2Aff::identity();
  }
  std::array<uint8_t, G2_BYTES> buf{};
  for (size_t i = 0; i < G2_BYTES; ++i) buf[i] = b[i];
  buf[0] &= 0x1F;
  auto x1 = Fp::from_bytes_be(buf.data());
  auto x0 = Fp::from_bytes_be(buf.data() + 48);
  if (!x0 || !x1) return std::nullopt;
  Fp2 x{*x0, *x1};
  auto y = (x.square() * x + G2Curve::b()).sqrt();
  if (!y) return std::nullopt;
  Fp2 yy = *y;
  if (fp2_is_larger_half(yy) != !!(flags & 0x20)) yy = -yy;
  G2Aff a;
  a.x = x;
  a.y = yy;
  a.inf = false;
  if (subgroup_check && !G2::from_affine(a).in_subgroup()) return std::nullopt;
  return a;
}

}  // namespace svc
