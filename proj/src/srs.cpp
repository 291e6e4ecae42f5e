#include "svc/srs.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "svc/msm.hpp"
#include "svc/rng.hpp"

namespace svc {

namespace {

constexpr char kMagic[8] = {'S', 'V', 'C', 'S', 'R', 'S', '0', '1'};

template <class Aff>
Aff neg_affine(const Aff& a) {
  if (a.inf) return a;
  Aff r = a;
  r.y = -r.y;
  return r;
}

}  // namespace

bool Srs::operator==(const Srs& o) const {
  if (degree != o.degree || g1.size() != o.g1.size()) return false;
  auto same_g1 = [](const G1Aff& a, const G1Aff& b) {
    return a.inf == b.inf && (a.inf || (a.x == b.x && a.y == b.y));
  };
  auto same_g2 = [](const G2Aff& a, const G2Aff& b) {
    return a.inf == b.inf && (a.inf || (a.x == b.x && a.y == b.y));
  };
  for (size_t i = 0; i < g1.size(); i++)
    if (!same_g1(g1[i], o.g1[i])) return false;
  return same_g2(g2[0], o.g2[0]) && same_g2(g2[1], o.g2[1]);
}

Srs trusted_setup(uint32_t degree_bound, uint64_t seed, bool retain_tau) {
  if (degree_bound == 0) throw std::invalid_argument("degree bound must be positive");
  DeterministicRng rng(seed);
  Fr tau = rng.next_fr();

  Srs s;
  s.degree = degree_bound;
  FixedBaseTable table(G1::generator().to_affine());
  std::vector<G1> jac;
  jac.reserve(degree_bound + 1);
  Fr power = Fr::one();
  for (uint32_t i = 0; i <= degree_bound; i++) {
    jac.push_back(table.mul(power));
    power = power * tau;
  }
  s.g1 = batch_to_affine(jac);
  s.g2[0] = G2::generator().to_affine();
  s.g2[1] = G2::generator().mul(tau).to_affine();
  if (retain_tau) s.tau = tau;
  return s;
}

bool srs_consistent(const Srs& s) {
  if (s.g1.size() != size_t(s.degree) + 1) return false;
  for (uint32_t i = 1; i <= s.degree; i++) {
    if (!pairing_product_is_one(
            {{s.g1[i], s.g2[0]}, {neg_affine(s.g1[i - 1]), s.g2[1]}}))
      return false;
  }
  return true;
}

void save_srs(const Srs& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open srs file for writing: " + path);
  out.write(kMagic, 8);
  uint32_t le = s.degree;
  uint8_t lenb[4] = {uint8_t(le), uint8_t(le >> 8), uint8_t(le >> 16), uint8_t(le >> 24)};
  out.write(reinterpret_cast<const char*>(lenb), 4);
  for (const auto& p : s.g1) {
    auto enc = g1_compress(p);
    out.write(reinterpret_cast<const char*>(enc.data()), enc.size());
  }
  for (const auto& q : s.g2) {
    auto enc = g2_compress(q);
    out.write(reinterpret_cast<const char*>(enc.data()), enc.size());
  }
  if (!out) throw std::runtime_error("srs write failed: " + path);
}

std::optional<Srs> load_srs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  uint8_t lenb[4];
  if (!in.read(reinterpret_cast<char*>(lenb), 4)) return std::nullopt;
  uint32_t degree = uint32_t(lenb[0]) | uint32_t(lenb[1]) << 8 |
                    uint32_t(lenb[2]) << 16 | uint32_t(lenb[3]) << 24;
  if (degree == 0 || degree > (1u << 24)) return std::nullopt;

  Srs s;
  s.degree = degree;
  s.g1.reserve(size_t(degree) + 1);
  std::array<uint8_t, G1_BYTES> b1;
  for (uint32_t i = 0; i <= degree; i++) {
    if (!in.read(reinterpret_cast<char*>(b1.data()), b1.size())) return std::nullopt;
    auto p = g1_decompress(b1.data());
    if (!p) return std::nullopt;
    s.g1.push_back(*p);
  }
  std::array<uint8_t, G2_BYTES> b2;
  for (size_t i = 0; i < 2; i++) {
    if (!in.read(reinterpret_cast<char*>(b2.data()), b2.size())) return std::nullopt;
    auto q = g2_decompress(b2.data());
    if (!q) return std::nullopt;
    s.g2[i] = *q;
  }
  char extra;
  if (in.read(&extra, 1)) return std::nullopt;  // trailing bytes
  return s;
}

G1Aff commit_poly(const Srs& srs, const Poly& poly) {
  if (poly.coeff.size() > size_t(srs.degree) + 1)
    throw std::invalid_argument("polynomial degree exceeds srs bound");
  std::vector<G1Aff> pts(srs.g1.begin(), srs.g1.begin() + poly.coeff.size());
  return msm_g1(pts, poly.coeff).to_affine();
}

std::pair<Fr, G1Aff> open_poly(const Srs& srs, const Poly& poly, const Fr& point) {
  auto [q, value] = divide_linear(poly, point);
  return {value, commit_poly(srs, q)};
}

bool verify_kzg(const Srs& srs, const G1Aff& commitment, const Fr& point,
                const Fr& value, const G1Aff& proof) {
  // e(C - value*g, g2) * e(-proof, tau*g2 - point*g2) == 1
  G1Aff lhs = G1::from_affine(commitment)
                  .add(G1::generator().mul(value).neg())
                  .to_affine();
  G2Aff rhs = G2::from_affine(srs.g2[1])
                  .add(G2::generator().mul(point).neg())
                  .to_affine();
  return pairing_product_is_one({{lhs, srs.g2[0]}, {neg_affine(proof), rhs}});
}

}  // namespace svc
