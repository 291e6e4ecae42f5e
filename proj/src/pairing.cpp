#include "svc/pairing.hpp"

namespace svc {

namespace {

constexpr u64 BLS_X = 0xD201000000010000ULL;  // curve parameter is -BLS_X

struct MillerPair {
  Fp px, py;   // G1 point
  Fp2 qx, qy;  // G2 point, also the running T
  Fp2 tx, ty;
};

// line through the current T (slope lam) evaluated at P, as a sparse element:
// xi*yP + (lam*xT - yT) * w^3 - lam*xP * w^5
Fp12 line_value(const MillerPair& mp, const Fp2& lam) {
  Fp12 l = Fp12::zero();
  l.c0.c0 = Fp2{mp.py, mp.py};  // xi * yP with xi = 1 + u
  l.c1.c1 = lam * mp.tx - mp.ty;
  l.c1.c2 = -lam.mul_fp(mp.px);
  return l;
}

Fp12 dbl_step(MillerPair& mp) {
  Fp2 three_x2 = mp.tx.square();
  three_x2 = three_x2 + three_x2 + three_x2;
  Fp2 lam = three_x2 * (mp.ty + mp.ty).inv();
  Fp12 l = line_value(mp, lam);
  Fp2 nx = lam.square() - mp.tx - mp.tx;
  Fp2 ny = lam * (mp.tx - nx) - mp.ty;
  mp.tx = nx;
  mp.ty = ny;
  return l;
}

Fp12 add_step(MillerPair& mp) {
  Fp2 lam = (mp.qy - mp.ty) * (mp.qx - mp.tx).inv();
  Fp12 l = line_value(mp, lam);
  Fp2 nx = lam.square() - mp.tx - mp.qx;
  Fp2 ny = lam * (mp.tx - nx) - mp.ty;
  mp.tx = nx;
  mp.ty = ny;
  return l;
}

Fp12 exp_neg_x(const Fp12& a) { return a.pow_u64(BLS_X).conj(); }

}  // namespace

Fp12 multi_miller_loop(const std::vector<std::pair<G1Aff, G2Aff>>& pairs) {
  std::vector<MillerPair> mps;
  mps.reserve(pairs.size());
  for (const auto& [p, q] : pairs) {
    if (p.inf || q.inf) continue;  // identity factors contribute 1
    MillerPair mp;
    mp.px = p.x;
    mp.py = p.y;
    mp.qx = q.x;
    mp.qy = q.y;
    mp.tx = q.x;
    mp.ty = q.y;
    mps.push_back(mp);
  }
  Fp12 f = Fp12::one();
  if (mps.empty()) return f;
  for (int i = 62; i >= 0; --i) {
    f = f.square();
    for (auto& mp : mps) f = f * dbl_step(mp);
    if ((BLS_X >> i) & 1) {
      for (auto& mp : mps) f = f * add_step(mp);
    }
  }
  return f.conj();  // negative curve parameter
}

Fp12 final_exponentiation(const Fp12& f) {
  // easy part: f^((p^6-1)(p^2+1)); lands in the cyclotomic subgroup where
  // conjugation is inversion
  Fp12 f1 = f.conj() * f.inv();
  Fp12 t2 = f1.frobenius(2) * f1;

  Fp12 t1 = t2.square().conj();
  Fp12 t3 = exp_neg_x(t2);
  Fp12 t4 = t3.square();
  Fp12 t5 = t1 * t3;
  t1 = exp_neg_x(t5);
  Fp12 t0 = exp_neg_x(t1);
  Fp12 t6 = exp_neg_x(t0);
  t6 = t6 * t4;
  t4 = exp_neg_x(t6);
  t5 = t5.conj();
  t4 = t4 * t5 * t2;
  t5 = t2.conj();
  t1 = t1 * t2;
  t1 = t1.frobenius(3);
  t6 = t6 * t5;
  t6 = t6.frobenius(1);
  t3 = t3 * t0;
  t3 = t3.frobenius(2);
  t3 = t3 * t1;
  t3 = t3 * t6;
  return t3 * t4;
}

Fp12 pairing(const G1Aff& p, const G2Aff& q) {
  return final_exponentiation(multi_miller_loop({{p, q}}));
}

bool pairing_product_is_one(
    const std::vector<std::pair<G1Aff, G2Aff>>& pairs) {
  return final_exponentiation(multi_miller_loop(pairs)).is_one();
}

}  // namespace svc
