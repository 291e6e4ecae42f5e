#pragma once
// G1/G2 group arithmetic (Jacobian coordinates) and compressed serialization.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "svc/fields.hpp"

namespace svc {

template <class F, class Curve>
struct Affine {
  F x, y;
  bool inf = true;

  static Affine identity() { return Affine{}; }
  bool operator==(const Affine& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
};

template <class F, class Curve>
struct Point {
  F x, y, z;  // z zero encodes the identity

  static Point identity() { return {F::zero(), F::zero(), F::zero()}; }

  static Point from_affine(const F& ax, const F& ay) {
    return {ax, ay, Curve::field_one()};
  }

  static Point from_affine(const Affine<F, Curve>& a) {
    return a.inf ? identity() : from_affine(a.x, a.y);
  }

  bool is_identity() const { return z.is_zero(); }

  Point neg() const { return {x, -y, z}; }

  Point dbl() const {
    if (is_identity()) return *this;
    F a = x.square();
    F b = y.square();
    F c = b.square();
    F t = (x + b).square() - a - c;
    F d = t + t;
    F e = a + a + a;
    F f = e.square();
    F x3 = f - (d + d);
    F c8 = c.dbl().dbl().dbl();
    F y3 = e * (d - x3) - c8;
    F z3 = (y * z).dbl();
    return {x3, y3, z3};
  }

  Point add(const Point& o) const {
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    F z1z1 = z.square();
    F z2z2 = o.z.square();
    F u1 = x * z2z2;
    F u2 = o.x * z1z1;
    F s1 = y * o.z * z2z2;
    F s2 = o.y * z * z1z1;
    if (u1 == u2) {
      if (s1 == s2) return dbl();
      return identity();
    }
    F h = u2 - u1;
    F i = h.dbl().square();
    F j = h * i;
    F rr = (s2 - s1).dbl();
    F v = u1 * i;
    F x3 = rr.square() - j - v.dbl();
    F y3 = rr * (v - x3) - (s1 * j).dbl();
    F z3 = ((z + o.z).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
  }

  Point add_affine(const Affine<F, Curve>& o) const {
    if (o.inf) return *this;
    if (is_identity()) return from_affine(o);
    F z1z1 = z.square();
    F u2 = o.x * z1z1;
    F s2 = o.y * z * z1z1;
    if (x == u2) {
      if (y == s2) return dbl();
      return identity();
    }
    F h = u2 - x;
    F hh = h.square();
    F i = hh.dbl().dbl();
    F j = h * i;
    F rr = (s2 - y).dbl();
    F v = x * i;
    F x3 = rr.square() - j - v.dbl();
    F y3 = rr * (v - x3) - (y * j).dbl();
    F z3 = (z + h).square() - z1z1 - hh;
    return {x3, y3, z3};
  }

  bool eq(const Point& o) const {
    if (is_identity() || o.is_identity())
      return is_identity() == o.is_identity();
    F z1z1 = z.square();
    F z2z2 = o.z.square();
    if (!(x * z2z2 == o.x * z1z1)) return false;
    return y * o.z * z2z2 == o.y * z * z1z1;
  }

  Affine<F, Curve> to_affine() const {
    if (is_identity()) return Affine<F, Curve>::identity();
    F zi = z.inv();
    F zi2 = zi.square();
    Affine<F, Curve> a;
    a.x = x * zi2;
    a.y = y * zi2 * zi;
    a.inf = false;
    return a;
  }

  template <size_t M>
  Point mul_limbs(const limb::Arr<M>& k) const {
    Point r = identity();
    bool started = false;
    for (size_t i = 64 * M; i-- > 0;) {
      if (started) r = r.dbl();
      if ((k[i / 64] >> (i % 64)) & 1) {
        r = r.add(*this);
        started = true;
      }
    }
    return r;
  }

  Point mul(const Fr& k) const { return mul_limbs(k.to_raw()); }

  Point mul_u64(u64 k) const { return mul_limbs(limb::Arr<1>{k}); }

  bool on_curve() const {
    if (is_identity()) return true;
    auto a = to_affine();
    return a.y.square() == a.x.square() * a.x + Curve::b();
  }

  bool in_subgroup() const { return mul_limbs(FrParams::MOD).is_identity(); }

  static Point generator() { return from_affine(Curve::gen()); }
};

// one shared inversion normalizes a whole vector of points
template <class F, class Curve>
std::vector<Affine<F, Curve>> batch_to_affine(
    const std::vector<Point<F, Curve>>& pts) {
  size_t n = pts.size();
  std::vector<Affine<F, Curve>> out(n);
  std::vector<F> zs;
  zs.reserve(n);
  std::vector<size_t> idx;
  idx.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (!pts[i].is_identity()) {
      zs.push_back(pts[i].z);
      idx.push_back(i);
    }
  }
  if (zs.empty()) return out;
  // prefix products, single inversion, then unwind
  std::vector<F> pref(zs.size());
  F acc = F::one();
  for (size_t i = 0; i < zs.size(); ++i) {
    pref[i] = acc;
    acc = acc * zs[i];
  }
  F inv = acc.inv();
  for (size_t i = zs.size(); i-- > 0;) {
    F zi = inv * pref[i];
    inv = inv * zs[i];
    const auto& p = pts[idx[i]];
    F zi2 = zi.square();
    out[idx[i]].x = p.x * zi2;
    out[idx[i]].y = p.y * zi2 * zi;
    out[idx[i]].inf = false;
  }
  return out;
}

struct G1Curve {
  static Fp field_one() { return Fp::one(); }
  static Fp b() { return Fp::from_u64(4); }
  static const Affine<Fp, G1Curve>& gen();
};

struct G2Curve {
  static Fp2 field_one() { return Fp2::one(); }
  static Fp2 b() { return {Fp::from_u64(4), Fp::from_u64(4)}; }
  static const Affine<Fp2, G2Curve>& gen();
};

using G1 = Point<Fp, G1Curve>;
using G1Aff = Affine<Fp, G1Curve>;
using G2 = Point<Fp2, G2Curve>;
using G2Aff = Affine<Fp2, G2Curve>;

inline constexpr size_t G1_BYTES = 48;
inline constexpr size_t G2_BYTES = 96;

std::array<uint8_t, G1_BYTES> g1_compress(const G1Aff& p);
std::array<uint8_t, G2_BYTES> g2_compress(const G2Aff& p);
std::array<uint8_t, G1_BYTES> g1_compress(const G1& p);
std::array<uint8_t, G2_BYTES> g2_compress(const G2& p);

// on-curve is always enforced; the subgroup check walks the full scalar and
// can be skipped for points from already-validated aggregates
std::optional<G1Aff> g1_decompress(const uint8_t* b, bool subgroup_check = true);
std::optional<G2Aff> g2_decompress(const uint8_t* b, bool subgroup_check = true);

}  // namespace svc
