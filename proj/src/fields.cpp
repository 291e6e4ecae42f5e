#include "svc/fields.hpp"

#include <cstdlib>

namespace svc {

std::optional<Fp2> Fp2::sqrt() const {
  if (c1.is_zero()) {
    if (auto r = c0.sqrt()) return Fp2{*r, Fp::zero()};
    if (auto r = (-c0).sqrt()) return Fp2{Fp::zero(), *r};
    return std::nullopt;
  }
  // norm-based: a root x0 + x1 u has x0^2 = (c0 +- sqrt(norm))/2
  Fp n = c0 * c0 + c1 * c1;
  auto s = n.sqrt();
  if (!s) return std::nullopt;
  static const Fp half = Fp::from_u64(2).inv();
  const Fp cands[2] = {*s, -*s};
  for (const Fp& sv : cands) {
    Fp d = (c0 + sv) * half;
    if (auto x0 = d.sqrt()) {
      if (!x0->is_zero()) {
        Fp x1 = c1 * (x0->dbl().inv());
        Fp2 cand{*x0, x1};
        if (cand.square() == *this) return cand;
      }
    }
  }
  return std::nullopt;
}

namespace {

struct FrobConsts {
  Fp2 g1, g2, g4;
  FrobConsts() {
    auto e = limb::div_small(limb::sub_small(Fp::MOD, 1), 6);
    if (e.second != 0) std::abort();  // p = 1 mod 6 by construction
    g1 = Fp2::xi().pow(e.first);
    g2 = g1 * g1;
    g4 = g2 * g2;
  }
};

const FrobConsts& frob_consts() {
  static const FrobConsts k;
  return k;
}

}  // namespace

Fp12 Fp12::frobenius(int k) const {
  const FrobConsts& fc = frob_consts();
  Fp12 r = *this;
  for (int i = 0; i < k; ++i) {
    auto f6 = [&](const Fp6& c) {
      return Fp6{c.c0.conj(), c.c1.conj() * fc.g2, c.c2.conj() * fc.g4};
    };
    r = Fp12{f6(r.c0), f6(r.c1).mul_fp2(fc.g1)};
  }
  return r;
}

}  // namespace svc
