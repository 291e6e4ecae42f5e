#include <doctest.h>

#include "svc/pairing.hpp"
#include "svc/rng.hpp"
#include "vectors/curve_vectors.hpp"

using namespace svc;

namespace {

Fp12 fp12_from(const char* const* names) {
  std::array<Fp, 12> c;
  for (int i = 0; i < 12; ++i) c[i] = Fp::from_hex(names[i]);
  Fp12 f;
  f.c0 = Fp6{Fp2{c[0], c[1]}, Fp2{c[2], c[3]}, Fp2{c[4], c[5]}};
  f.c1 = Fp6{Fp2{c[6], c[7]}, Fp2{c[8], c[9]}, Fp2{c[10], c[11]}};
  return f;
}

}  // namespace

// The reference generator applies the literal exponent (p^12-1)/r; the
// production chain applies three times that.  Cubing is injective on the
// r-torsion (gcd(3, r) = 1), so both are the same pairing up to a fixed
// relabeling and the exact cube relation pins the whole Miller/final-exp
// pipeline against the definition.
TEST_CASE("pairing of the generators matches the definitional reference") {
  const char* const e1[12] = {
      refvec::pair_g1_g2_0, refvec::pair_g1_g2_1,  refvec::pair_g1_g2_2,
      refvec::pair_g1_g2_3, refvec::pair_g1_g2_4,  refvec::pair_g1_g2_5,
      refvec::pair_g1_g2_6, refvec::pair_g1_g2_7,  refvec::pair_g1_g2_8,
      refvec::pair_g1_g2_9, refvec::pair_g1_g2_10, refvec::pair_g1_g2_11};
  Fp12 e = pairing(G1::generator().to_affine(), G2::generator().to_affine());
  CHECK(e == fp12_from(e1).pow_u64(3));
}

TEST_CASE("pairing of scalar multiples matches the definitional reference") {
  const char* const e2[12] = {
      refvec::pair_5g1_7g2_0, refvec::pair_5g1_7g2_1,  refvec::pair_5g1_7g2_2,
      refvec::pair_5g1_7g2_3, refvec::pair_5g1_7g2_4,  refvec::pair_5g1_7g2_5,
      refvec::pair_5g1_7g2_6, refvec::pair_5g1_7g2_7,  refvec::pair_5g1_7g2_8,
      refvec::pair_5g1_7g2_9, refvec::pair_5g1_7g2_10, refvec::pair_5g1_7g2_11};
  Fp12 e = pairing(G1::generator().mul_u64(5).to_affine(),
                   G2::generator().mul_u64(7).to_affine());
  CHECK(e == fp12_from(e2).pow_u64(3));
  Fp12 base = pairing(G1::generator().to_affine(), G2::generator().to_affine());
  CHECK(e == base.pow_u64(35));
}

TEST_CASE("bilinearity, order, and non-degeneracy") {
  DeterministicRng rng(3001);
  G1Aff g1 = G1::generator().to_affine();
  G2Aff g2 = G2::generator().to_affine();
  Fp12 base = pairing(g1, g2);
  CHECK(!base.is_one());
  CHECK(base.pow(FrParams::MOD).is_one());
  for (int i = 0; i < 3; ++i) {
    Fr a = rng.next_fr(), b = rng.next_fr();
    Fp12 lhs = pairing(G1::generator().mul(a).to_affine(),
                       G2::generator().mul(b).to_affine());
    CHECK(lhs == base.pow((a * b).to_raw()));
  }
  // additivity in the first argument
  Fr a = rng.next_fr(), b = rng.next_fr();
  G1 pa = G1::generator().mul(a), pb = G1::generator().mul(b);
  Fp12 lhs = pairing(pa.add(pb).to_affine(), g2);
  CHECK(lhs == pairing(pa.to_affine(), g2) * pairing(pb.to_affine(), g2));
}

TEST_CASE("multi-pairing products") {
  DeterministicRng rng(3002);
  Fr a = rng.next_fr(), b = rng.next_fr();
  G1Aff p1 = G1::generator().mul(a).to_affine();
  G2Aff q1 = G2::generator().mul(b).to_affine();
  G1Aff p2 = G1::generator().mul(a * b).neg().to_affine();
  CHECK(pairing_product_is_one({{p1, q1}, {p2, G2::generator().to_affine()}}));
  CHECK(!pairing_product_is_one({{p1, q1}}));
  // identity slots are ignored
  CHECK(pairing_product_is_one(
      {{p1, q1}, {p2, G2::generator().to_affine()}, {G1Aff::identity(), q1}}));
}
