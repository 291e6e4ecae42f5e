#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "svc/msm.hpp"
#include "svc/polynomial.hpp"
#include "svc/rng.hpp"
#include "svc/srs.hpp"
#include "util.hpp"
#include "vectors/curve_vectors.hpp"

using namespace svc;
using namespace refvec;

namespace {

Poly rand_poly(DeterministicRng& rng, size_t max_len) {
  std::vector<Fr> c;
  size_t len = rng.next_index(max_len + 1);
  for (size_t i = 0; i < len; i++) c.push_back(rng.next_fr());
  return Poly(std::move(c));
}

std::string g1_hex(const G1Aff& p) {
  auto enc = g1_compress(p);
  return testutil::to_hex(enc.data(), enc.size());
}

std::string g2_hex(const G2Aff& p) {
  auto enc = g2_compress(p);
  return testutil::to_hex(enc.data(), enc.size());
}

}  // namespace

TEST_CASE("polynomial ring laws on random inputs") {
  DeterministicRng rng(1001);
  for (int round = 0; round < 30; round++) {
    Poly a = rand_poly(rng, 8), b = rand_poly(rng, 8), c = rand_poly(rng, 8);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    Fr x = rng.next_fr();
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
  }
}

TEST_CASE("linear division is exact: q*(X-c) + p(c) == p") {
  DeterministicRng rng(1002);
  for (int round = 0; round < 30; round++) {
    Poly p = rand_poly(rng, 10);
    Fr c = rng.next_fr();
    auto [q, rem] = divide_linear(p, c);
    CHECK(rem == p.eval(c));
    Poly lin(std::vector<Fr>{Fr::zero() - c, Fr::one()});
    CHECK(q * lin + Poly::constant(rem) == p);
  }
}

TEST_CASE("long division round-trips with small remainder") {
  DeterministicRng rng(1003);
  for (int round = 0; round < 30; round++) {
    Poly p = rand_poly(rng, 12);
    Poly d = rand_poly(rng, 6);
    if (d.is_zero()) d = Poly::constant(Fr::one());
    auto [q, r] = divide(p, d);
    CHECK(q * d + r == p);
    if (!r.is_zero()) CHECK(r.coeff.size() < d.coeff.size());
  }
  CHECK_THROWS_AS(divide(Poly::constant(Fr::one()), Poly::zero()),
                  std::invalid_argument);
}

TEST_CASE("interpolation hits the prescribed values") {
  DeterministicRng rng(1004);
  std::vector<Fr> xs, ys;
  for (int i = 0; i < 7; i++) {
    xs.push_back(Fr::from_u64(uint64_t(i) * 1000 + 3));
    ys.push_back(rng.next_fr());
  }
  Poly p = interpolate(xs, ys);
  CHECK(p.coeff.size() <= xs.size());
  for (size_t i = 0; i < xs.size(); i++) CHECK(p.eval(xs[i]) == ys[i]);
}

TEST_CASE("vanishing polynomial is zero exactly on its roots") {
  std::vector<Fr> xs = {Fr::from_u64(0), Fr::from_u64(1), Fr::from_u64(5)};
  Poly v = vanishing(xs);
  CHECK(v.coeff.size() == 4);
  for (const Fr& x : xs) CHECK(v.eval(x) == Fr::zero());
  CHECK(v.eval(Fr::from_u64(2)) != Fr::zero());
  CHECK(v.coeff.back() == Fr::one());
}

TEST_CASE("lagrange basis pinned cases") {
  CHECK(lagrange_basis(1, 0) == Poly::constant(Fr::one()));

  Poly l20 = lagrange_basis(2, 0);  // 1 - X over {0,1}
  CHECK(l20.coeff.size() == 2);
  CHECK(l20.coeff[0] == Fr::one());
  CHECK(l20.coeff[1] == Fr::zero() - Fr::one());

  Poly l42 = lagrange_basis(4, 2);
  for (uint64_t j = 0; j < 4; j++)
    CHECK(l42.eval(Fr::from_u64(j)) == (j == 2 ? Fr::one() : Fr::zero()));

  CHECK_THROWS_AS(lagrange_basis(4, 4), std::out_of_range);
}

TEST_CASE("multi-scalar multiplication matches the naive sum") {
  DeterministicRng rng(1005);
  for (size_t n : {size_t(0), size_t(1), size_t(2), size_t(17), size_t(100)}) {
    std::vector<G1Aff> pts;
    std::vector<Fr> sc;
    G1 naive = G1::identity();
    for (size_t i = 0; i < n; i++) {
      G1 p = G1::generator().mul(rng.next_fr());
      if (i % 7 == 3) p = G1::identity();  // identity points are legal inputs
      Fr s = rng.next_fr();
      if (i % 5 == 2) s = Fr::zero();  // zero scalars too
      pts.push_back(p.to_affine());
      sc.push_back(s);
      naive = naive.add(p.mul(s));
    }
    CHECK(msm_g1(pts, sc).eq(naive));
  }
  CHECK_THROWS_AS(msm_g1({G1::generator().to_affine()}, {}), std::invalid_argument);
}

TEST_CASE("fixed-base table agrees with generic multiplication") {
  DeterministicRng rng(1006);
  FixedBaseTable table(G1::generator().to_affine());
  for (int round = 0; round < 10; round++) {
    Fr s = rng.next_fr();
    CHECK(table.mul(s).eq(G1::generator().mul(s)));
  }
  CHECK(table.mul(Fr::zero()).is_identity());
  CHECK(table.mul(Fr::one()).eq(G1::generator()));
}

TEST_CASE("trusted setup matches the frozen reference values") {
  Srs s = trusted_setup(2, 42, /*retain_tau=*/true);
  REQUIRE(s.tau.has_value());
  CHECK(s.tau->to_hex() == srs42_tau);
  CHECK(g1_hex(s.g1[0]) == "97f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905"
                           "a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb");
  CHECK(g1_hex(s.g1[1]) == srs42_g1_pow1);
  CHECK(g1_hex(s.g1[2]) == srs42_g1_pow2);
  CHECK(g2_hex(s.g2[1]) == srs42_g2_pow1);
}

TEST_CASE("trusted setup shape, determinism, and errors") {
  Srs a = trusted_setup(1, 9);
  CHECK(a.g1.size() == 2);
  CHECK(!a.tau.has_value());
  CHECK(G1::from_affine(a.g1[0]).eq(G1::generator()));

  Srs b = trusted_setup(1, 9);
  CHECK(a == b);

  CHECK_THROWS_AS(trusted_setup(0, 9), std::invalid_argument);
}

TEST_CASE("srs pairing consistency holds for generated powers") {
  Srs s = trusted_setup(8, 42);
  CHECK(srs_consistent(s));
  // Corrupt one power: the check must fail.
  s.g1[3] = G1::from_affine(s.g1[3]).dbl().to_affine();
  CHECK(!srs_consistent(s));
}

TEST_CASE("srs file round-trip and rejection of malformed files") {
  Srs s = trusted_setup(3, 7, /*retain_tau=*/true);
  const std::string path = "srs_roundtrip.bin";
  save_srs(s, path);
  auto loaded = load_srs(path);
  REQUIRE(loaded.has_value());
  CHECK(!loaded->tau.has_value());  // tau never leaves the process
  Srs expect = s;
  expect.tau.reset();
  CHECK(*loaded == expect);

  // Bad magic.
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << "NOTSRS00" << std::string(200, '\0');
  }
  CHECK(!load_srs(path).has_value());

  // Truncated payload.
  save_srs(s, path);
  {
    std::ifstream in(path, std::ios::binary);
    std::string all((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(all.data(), std::streamsize(all.size() - 10));
  }
  CHECK(!load_srs(path).has_value());
  std::remove(path.c_str());
  CHECK(!load_srs(path).has_value());
}

TEST_CASE("commit_poly pinned cases") {
  Srs s = trusted_setup(2, 42, /*retain_tau=*/true);
  CHECK(G1::from_affine(commit_poly(s, Poly::zero())).is_identity());

  Fr a0 = Fr::from_u64(77);
  CHECK(G1::from_affine(commit_poly(s, Poly::constant(a0)))
            .eq(G1::generator().mul(a0)));

  // X^2 + 1 committed equals g^(tau^2 + 1), checkable because tau is known.
  Poly p(std::vector<Fr>{Fr::one(), Fr::zero(), Fr::one()});
  Fr expect = *s.tau * *s.tau + Fr::one();
  CHECK(G1::from_affine(commit_poly(s, p)).eq(G1::generator().mul(expect)));

  Poly too_big(std::vector<Fr>{Fr::one(), Fr::one(), Fr::one(), Fr::one()});
  CHECK_THROWS_AS(commit_poly(s, too_big), std::invalid_argument);
}

TEST_CASE("open_poly pinned cases") {
  Srs s = trusted_setup(4, 11);
  Fr a0 = Fr::from_u64(5);
  auto [v1, pi1] = open_poly(s, Poly::constant(a0), Fr::from_u64(123));
  CHECK(v1 == a0);
  CHECK(pi1.inf);

  // phi(X) = X at point 0: value 0, quotient 1, proof g.
  Poly x_poly(std::vector<Fr>{Fr::zero(), Fr::one()});
  auto [v2, pi2] = open_poly(s, x_poly, Fr::zero());
  CHECK(v2 == Fr::zero());
  CHECK(G1::from_affine(pi2).eq(G1::generator()));
}

TEST_CASE("kzg round-trip accepts and single-component tampers reject") {
  DeterministicRng rng(1007);
  Srs s = trusted_setup(64, 13);
  for (int round = 0; round < 8; round++) {
    Poly p = rand_poly(rng, 64);
    Fr point = rng.next_fr();
    G1Aff c = commit_poly(s, p);
    auto [value, proof] = open_poly(s, p, point);
    CHECK(verify_kzg(s, c, point, value, proof));
    CHECK(!verify_kzg(s, c, point, value + Fr::one(), proof));
    CHECK(!verify_kzg(s, c, point + Fr::one(), value, proof));
    G1Aff bad_c = G1::from_affine(c).add(G1::generator()).to_affine();
    CHECK(!verify_kzg(s, bad_c, point, value, proof));
    G1Aff bad_pi = G1::from_affine(proof).add(G1::generator()).to_affine();
    CHECK(!verify_kzg(s, c, point, value, bad_pi));
  }
}

TEST_CASE("kzg accepts the zero-polynomial identity triple") {
  Srs s = trusted_setup(2, 17);
  CHECK(verify_kzg(s, G1Aff::identity(), Fr::from_u64(9), Fr::zero(),
                   G1Aff::identity()));
}

TEST_CASE("kzg frozen vectors: commitment and opening for the 8-point domain") {
  Srs s = trusted_setup(8, 42);
  std::vector<Fr> msgs;
  for (uint64_t m : {3, 1, 4, 1, 5, 9, 2, 6}) msgs.push_back(Fr::from_u64(m));
  std::vector<Fr> xs;
  for (uint64_t j = 0; j < 8; j++) xs.push_back(Fr::from_u64(j));
  Poly phi = interpolate(xs, msgs);
  G1Aff c = commit_poly(s, phi);
  CHECK(g1_hex(c) == kzg8_commit);
  auto [value, proof] = open_poly(s, phi, Fr::from_u64(2));
  CHECK(value == Fr::from_u64(4));
  CHECK(g1_hex(proof) == kzg8_open2);
  CHECK(verify_kzg(s, c, Fr::from_u64(2), value, proof));
}
