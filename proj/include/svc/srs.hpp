#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svc/ec.hpp"
#include "svc/pairing.hpp"
#include "svc/polynomial.hpp"

namespace svc {

// Structured reference string: powers of a secret tau in both groups.
// tau is populated only by the insecure-debug setup flag; production use
// would load a ceremony transcript instead.
struct Srs {
  uint32_t degree = 0;          // highest committed power in g1
  std::vector<G1Aff> g1;        // g1[i] = g^(tau^i), size degree+1
  std::array<G2Aff, 2> g2{};    // { g2, g2^tau }
  std::optional<Fr> tau;        // retained only when requested at setup

  bool operator==(const Srs& o) const;
};

// Deterministic test-only setup: tau is the first scalar drawn from the
// seeded generator. Throws std::invalid_argument for degree_bound = 0.
Srs trusted_setup(uint32_t degree_bound, uint64_t seed, bool retain_tau = false);

// Pairing consistency: e(g1[i], g2) == e(g1[i-1], g2^tau) for every i >= 1.
bool srs_consistent(const Srs& s);

// File format: magic "SVCSRS01", LE u32 degree, degree+1 compressed G1
// elements, then 2 compressed G2 elements. tau is never written.
void save_srs(const Srs& s, const std::string& path);
std::optional<Srs> load_srs(const std::string& path);

// Commitment [phi] = sum_i coeff_i * g^(tau^i). Throws on degree overflow.
G1Aff commit_poly(const Srs& srs, const Poly& poly);

// Evaluation proof: returns (phi(point), [(phi(X) - phi(point)) / (X - point)]).
std::pair<Fr, G1Aff> open_poly(const Srs& srs, const Poly& poly, const Fr& point);

// Pairing check e(C / g^value, g2) == e(proof, g2^tau / g2^point).
bool verify_kzg(const Srs& srs, const G1Aff& commitment, const Fr& point,
                const Fr& value, const G1Aff& proof);

}  // namespace svc
