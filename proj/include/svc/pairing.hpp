#pragma once
// Optimal ate pairing over BLS12-381: affine Miller loop plus the standard
// final-exponentiation chain (exponent verified to be 3*(p^4-p^2+1)/r).

#include <utility>
#include <vector>

#include "svc/ec.hpp"

namespace svc {

Fp12 multi_miller_loop(const std::vector<std::pair<G1Aff, G2Aff>>& pairs);
Fp12 final_exponentiation(const Fp12& f);
Fp12 pairing(const G1Aff& p, const G2Aff& q);

// true iff the product of e(p_i, q_i) over all pairs equals one
bool pairing_product_is_one(const std::vector<std::pair<G1Aff, G2Aff>>& pairs);

}  // namespace svc
