#pragma once
// Prime fields and the extension tower for the BLS12-381 pairing stack.
// Montgomery constants are computed at compile time from the modulus; the
// moduli themselves are pinned by construction identities and test vectors.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace limb {

template <size_t N>
using Arr = std::array<u64, N>;

template <size_t N>
constexpr u64 add(Arr<N>& r, const Arr<N>& a, const Arr<N>& b) {
  u64 c = 0;
  for (size_t i = 0; i < N; ++i) {
    u128 t = (u128)a[i] + b[i] + c;
    r[i] = (u64)t;
    c = (u64)(t >> 64);
  }
  return c;
}

template <size_t N>
constexpr u64 sub(Arr<N>& r, const Arr<N>& a, const Arr<N>& b) {
  u64 br = 0;
  for (size_t i = 0; i < N; ++i) {
    u128 t = (u128)a[i] - b[i] - br;
    r[i] = (u64)t;
    br = (u64)(t >> 64) & 1;
  }
  return br;
}

template <size_t N>
constexpr bool geq(const Arr<N>& a, const Arr<N>& b) {
  for (size_t i = N; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return true;
}

template <size_t N>
constexpr bool is_zero(const Arr<N>& a) {
  for (auto x : a)
    if (x) return false;
  return true;
}

template <size_t N>
constexpr bool is_one(const Arr<N>& a) {
  if (a[0] != 1) return false;
  for (size_t i = 1; i < N; ++i)
    if (a[i]) return false;
  return true;
}

// right shift by one with an explicit carry-in bit at the top
template <size_t N>
constexpr void shr1(Arr<N>& a, u64 carry_in) {
  for (size_t i = 0; i < N - 1; ++i) a[i] = (a[i] >> 1) | (a[i + 1] << 63);
  a[N - 1] = (a[N - 1] >> 1) | (carry_in << 63);
}

constexpr u64 hexval(char c) {
  if (c >= '0' && c <= '9') return (u64)(c - '0');
  if (c >= 'a' && c <= 'f') return (u64)(c - 'a' + 10);
  if (c >= 'A' && c <= 'F') return (u64)(c - 'A' + 10);
  return 0;
}

template <size_t N>
constexpr Arr<N> parse_hex(std::string_view s) {
  Arr<N> r{};
  size_t bit = 0;
  for (size_t i = s.size(); i-- > 0 && bit < 64 * N;) {
    r[bit / 64] |= hexval(s[i]) << (bit % 64);
    bit += 4;
  }
  return r;
}

constexpr u64 neg_inv64(u64 m0) {
  u64 inv = 1;
  for (int i = 0; i < 6; ++i) inv *= 2 - m0 * inv;
  return ~inv + 1;
}

template <size_t N>
constexpr Arr<N> pow2_mod(const Arr<N>& m, int bits) {
  Arr<N> r{};
  r[0] = 1;
  for (int i = 0; i < bits; ++i) {
    Arr<N> d{};
    u64 carry = add(d, r, r);
    if (carry || geq(d, m)) {
      Arr<N> s{};
      sub(s, d, m);
      d = s;
    }
    r = d;
  }
  return r;
}

template <size_t N>
constexpr std::pair<Arr<N>, u64> div_small(const Arr<N>& a, u64 d) {
  Arr<N> q{};
  u128 rem = 0;
  for (size_t i = N; i-- > 0;) {
    u128 cur = (rem << 64) | a[i];
    q[i] = (u64)(cur / d);
    rem = cur % d;
  }
  return {q, (u64)rem};
}

template <size_t N>
constexpr Arr<N> sub_small(const Arr<N>& a, u64 d) {
  Arr<N> b{};
  b[0] = d;
  Arr<N> r{};
  sub(r, a, b);
  return r;
}

template <size_t N>
constexpr Arr<N> mont_mul(const Arr<N>& a, const Arr<N>& b, const Arr<N>& m,
                          u64 inv) {
  std::array<u64, N + 2> t{};
  for (size_t i = 0; i < N; ++i) {
    u64 c = 0;
    for (size_t j = 0; j < N; ++j) {
      u128 x = (u128)a[i] * b[j] + t[j] + c;
      t[j] = (u64)x;
      c = (u64)(x >> 64);
    }
    u128 x = (u128)t[N] + c;
    t[N] = (u64)x;
    t[N + 1] = (u64)(x >> 64);
    u64 mc = t[0] * inv;
    u128 y = (u128)mc * m[0] + t[0];
    c = (u64)(y >> 64);
    for (size_t j = 1; j < N; ++j) {
      y = (u128)mc * m[j] + t[j] + c;
      t[j - 1] = (u64)y;
      c = (u64)(y >> 64);
    }
    y = (u128)t[N] + c;
    t[N - 1] = (u64)y;
    t[N] = t[N + 1] + (u64)(y >> 64);
  }
  Arr<N> r{};
  for (size_t i = 0; i < N; ++i) r[i] = t[i];
  if (t[N] || geq(r, m)) {
    Arr<N> s{};
    sub(s, r, m);
    r = s;
  }
  return r;
}

// binary extended gcd; m odd prime, returns a^-1 mod m (0 for a == 0)
template <size_t N>
constexpr Arr<N> modinv_raw(Arr<N> a, const Arr<N>& m) {
  if (is_zero(a)) return a;
  Arr<N> u = a, v = m, x1{}, x2{};
  x1[0] = 1;
  auto half_mod = [&m](Arr<N>& t) {
    if (t[0] & 1) {
      u64 c = add(t, t, m);
      shr1(t, c);
    } else {
      shr1(t, 0);
    }
  };
  while (!is_one(u) && !is_one(v)) {
    while (!(u[0] & 1)) {
      shr1(u, 0);
      half_mod(x1);
    }
    while (!(v[0] & 1)) {
      shr1(v, 0);
      half_mod(x2);
    }
    if (geq(u, v)) {
      sub(u, u, v);
      Arr<N> d{};
      if (sub(d, x1, x2)) {
        Arr<N> e{};
        add(e, d, m);
        d = e;
      }
      x1 = d;
    } else {
      sub(v, v, u);
      Arr<N> d{};
      if (sub(d, x2, x1)) {
        Arr<N> e{};
        add(e, d, m);
        d = e;
      }
      x2 = d;
    }
  }
  return is_one(u) ? x1 : x2;
}

}  // namespace limb

struct FpParams {
  static constexpr size_t LIMBS = 6;
  static constexpr limb::Arr<6> MOD = limb::parse_hex<6>(
      "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f624"
      "1eabfffeb153ffffb9feffffffffaaab");
};

struct FrParams {
  static constexpr size_t LIMBS = 4;
  static constexpr limb::Arr<4> MOD = limb::parse_hex<4>(
      "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
};

template <class Params>
class Fe {
 public:
  static constexpr size_t N = Params::LIMBS;
  using Raw = limb::Arr<N>;
  static constexpr Raw MOD = Params::MOD;
  static constexpr u64 INV = limb::neg_inv64(MOD[0]);
  static constexpr Raw R1 = limb::pow2_mod(MOD, 64 * (int)N);
  static constexpr Raw R2 = limb::pow2_mod(MOD, 128 * (int)N);
  static constexpr size_t BYTES = 8 * N;

  constexpr Fe() : v_{} {}

  static constexpr Fe zero() { return Fe{}; }
  static constexpr Fe one() {
    Fe r;
    r.v_ = R1;
    return r;
  }

  static constexpr Fe from_u64(u64 x) {
    Fe r;
    Raw raw{};
    raw[0] = x;
    r.v_ = limb::mont_mul(raw, R2, MOD, INV);
    return r;
  }

  // value must already be reduced; converts into Montgomery form
  static constexpr Fe from_raw(const Raw& raw) {
    Fe r;
    r.v_ = limb::mont_mul(raw, R2, MOD, INV);
    return r;
  }

  static Fe from_hex(std::string_view s) {
    return from_raw(limb::parse_hex<N>(s));
  }

  constexpr Raw to_raw() const {
    Raw one_raw{};
    one_raw[0] = 1;
    return limb::mont_mul(v_, one_raw, MOD, INV);
  }

  // strict: rejects non-canonical (>= modulus) encodings
  static std::optional<Fe> from_bytes_be(const uint8_t* b) {
    Raw raw{};
    for (size_t i = 0; i < BYTES; ++i)
      raw[(BYTES - 1 - i) / 8] |= (u64)b[i] << (8 * ((BYTES - 1 - i) % 8));
    if (limb::geq(raw, MOD)) return std::nullopt;
    return from_raw(raw);
  }

  // reduces an arbitrary BYTES-long big-endian value mod the modulus
  static Fe from_bytes_reduce(const uint8_t* b) {
    Raw raw{};
    for (size_t i = 0; i < BYTES; ++i)
      raw[(BYTES - 1 - i) / 8] |= (u64)b[i] << (8 * ((BYTES - 1 - i) % 8));
    while (limb::geq(raw, MOD)) {
      Raw s{};
      limb::sub(s, raw, MOD);
      raw = s;
    }
    return from_raw(raw);
  }

  void to_bytes_be(uint8_t* out) const {
    Raw raw = to_raw();
    for (size_t i = 0; i < BYTES; ++i)
      out[i] = (uint8_t)(raw[(BYTES - 1 - i) / 8] >> (8 * ((BYTES - 1 - i) % 8)));
  }

  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    Raw raw = to_raw();
    std::string s(2 * BYTES, '0');
    for (size_t i = 0; i < 2 * BYTES; ++i) {
      size_t nib = 2 * BYTES - 1 - i;
      s[i] = digits[(raw[nib / 16] >> (4 * (nib % 16))) & 0xF];
    }
    return s;
  }

  constexpr bool is_zero() const { return limb::is_zero(v_); }
  constexpr bool operator==(const Fe& o) const { return v_ == o.v_; }
  constexpr bool operator!=(const Fe& o) const { return !(v_ == o.v_); }

  constexpr Fe operator+(const Fe& o) const {
    Fe r;
    u64 c = limb::add(r.v_, v_, o.v_);
    if (c || limb::geq(r.v_, MOD)) {
      Raw s{};
      limb::sub(s, r.v_, MOD);
      r.v_ = s;
    }
    return r;
  }

  constexpr Fe operator-(const Fe& o) const {
    Fe r;
    if (limb::sub(r.v_, v_, o.v_)) {
      Raw s{};
      limb::add(s, r.v_, MOD);
      r.v_ = s;
    }
    return r;
  }

  constexpr Fe operator-() const { return zero() - *this; }

  constexpr Fe operator*(const Fe& o) const {
    Fe r;
    r.v_ = limb::mont_mul(v_, o.v_, MOD, INV);
    return r;
  }

  constexpr Fe square() const { return *this * *this; }

  constexpr Fe dbl() const { return *this + *this; }

  Fe& operator+=(const Fe& o) { return *this = *this + o; }
  Fe& operator-=(const Fe& o) { return *this = *this - o; }
  Fe& operator*=(const Fe& o) { return *this = *this * o; }

  template <size_t M>
  constexpr Fe pow(const limb::Arr<M>& e) const {
    Fe r = one();
    Fe b = *this;
    for (size_t i = 0; i < 64 * M; ++i) {
      if ((e[i / 64] >> (i % 64)) & 1) r = r * b;
      b = b.square();
    }
    return r;
  }

  constexpr Fe pow_u64(u64 e) const {
    limb::Arr<1> a{e};
    return pow(a);
  }

  Fe inv() const {
    Fe r;
    r.v_ = limb::modinv_raw(v_, MOD);
    r.v_ = limb::mont_mul(r.v_, R2, MOD, INV);
    r.v_ = limb::mont_mul(r.v_, R2, MOD, INV);
    return r;
  }

  // valid only when the modulus is 3 mod 4 (true for the base field)
  std::optional<Fe> sqrt() const {
    static const Raw e = [] {
      Raw t = sub_small_m(MOD, 3);
      return limb::div_small(t, 4).first;  // (p-3)/4
    }();
    // candidate a^((p+1)/4) = a * a^((p-3)/4)
    Fe c = *this * pow(e);
    if (c * c == *this) return c;
    return std::nullopt;
  }

  // for deterministic tie-breaks: compares canonical integer values
  bool raw_gt(const Fe& o) const {
    Raw a = to_raw(), b = o.to_raw();
    for (size_t i = N; i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }

 private:
  static constexpr Raw sub_small_m(const Raw& a, u64 d) {
    return limb::sub_small(a, d);
  }
  Raw v_;
};

using Fp = Fe<FpParams>;
using Fr = Fe<FrParams>;

// ------------------------------------------------------------------- tower

struct Fp2 {
  Fp c0, c1;

  static constexpr Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
  static constexpr Fp2 one() { return {Fp::one(), Fp::zero()}; }
  static Fp2 xi() { return {Fp::one(), Fp::one()}; }  // 1 + u

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp2& o) const { return !(*this == o); }

  Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }

  Fp2 operator*(const Fp2& o) const {
    Fp a = c0 * o.c0;
    Fp b = c1 * o.c1;
    Fp c = (c0 + c1) * (o.c0 + o.c1);
    return {a - b, c - a - b};
  }

  Fp2 mul_fp(const Fp& s) const { return {c0 * s, c1 * s}; }

  Fp2 square() const {
    Fp a = c0 + c1;
    Fp b = c0 - c1;
    Fp c = c0 * c1;
    return {a * b, c + c};
  }

  Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }

  Fp2 mul_by_xi() const { return {c0 - c1, c0 + c1}; }  // * (1 + u)

  Fp2 conj() const { return {c0, -c1}; }

  Fp2 inv() const {
    Fp n = (c0 * c0 + c1 * c1).inv();
    return {c0 * n, -(c1 * n)};
  }

  template <size_t M>
  Fp2 pow(const limb::Arr<M>& e) const {
    Fp2 r = one();
    Fp2 b = *this;
    for (size_t i = 0; i < 64 * M; ++i) {
      if ((e[i / 64] >> (i % 64)) & 1) r = r * b;
      b = b.square();
    }
    return r;
  }

  // square root in Fp2 (p = 3 mod 4); empty when no root exists
  std::optional<Fp2> sqrt() const;
};

struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fp6& o) const {
    return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
  }

  Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }

  Fp6 operator*(const Fp6& o) const {
    Fp2 t0 = c0 * o.c0;
    Fp2 t1 = c1 * o.c1;
    Fp2 t2 = c2 * o.c2;
    Fp2 r0 = ((c1 + c2) * (o.c1 + o.c2) - t1 - t2).mul_by_xi() + t0;
    Fp2 r1 = (c0 + c1) * (o.c0 + o.c1) - t0 - t1 + t2.mul_by_xi();
    Fp2 r2 = (c0 + c2) * (o.c0 + o.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }

  Fp6 mul_fp2(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

  Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fp6 inv() const {
    Fp2 t0 = c0.square() - (c1 * c2).mul_by_xi();
    Fp2 t1 = c2.square().mul_by_xi() - c0 * c1;
    Fp2 t2 = c1.square() - c0 * c2;
    Fp2 d = (c0 * t0 + (c2 * t1).mul_by_xi() + (c1 * t2).mul_by_xi()).inv();
    return {t0 * d, t1 * d, t2 * d};
  }
};

struct Fp12 {
  Fp6 c0, c1;

  static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp12& o) const { return !(*this == o); }
  bool is_one() const { return *this == one(); }

  Fp12 operator*(const Fp12& o) const {
    Fp6 a = c0 * o.c0;
    Fp6 b = c1 * o.c1;
    Fp6 c = (c0 + c1) * (o.c0 + o.c1);
    return {a + b.mul_by_v(), c - a - b};
  }

  Fp12 square() const { return *this * *this; }

  Fp12 conj() const { return {c0, -c1}; }

  Fp12 inv() const {
    Fp6 d = (c0 * c0 - (c1 * c1).mul_by_v()).inv();
    return {c0 * d, -(c1 * d)};
  }

  template <size_t M>
  Fp12 pow(const limb::Arr<M>& e) const {
    Fp12 r = one();
    Fp12 b = *this;
    for (size_t i = 0; i < 64 * M; ++i) {
      if ((e[i / 64] >> (i % 64)) & 1) r = r * b;
      b = b.square();
    }
    return r;
  }

  Fp12 pow_u64(u64 e) const {
    limb::Arr<1> a{e};
    return pow(a);
  }

  // Frobenius endomorphism x -> x^p, applied k times
  Fp12 frobenius(int k = 1) const;

  // coefficient list in tower order, matching the reference generator
  std::array<Fp, 12> coeffs() const {
    return {c0.c0.c0, c0.c0.c1, c0.c1.c0, c0.c1.c1, c0.c2.c0, c0.c2.c1,
            c1.c0.c0, c1.c0.c1, c1.c1.c0, c1.c1.c1, c1.c2.c0, c1.c2.c1};
  }
};

}  // namespace svc
