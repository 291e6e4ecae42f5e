#include "svc/polynomial.hpp"

#include <stdexcept>

namespace svc {

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Fr::zero());
  for (size_t i = 0; i < a.coeff.size(); i++) r.coeff[i] = a.coeff[i];
  for (size_t i = 0; i < b.coeff.size(); i++) r.coeff[i] = r.coeff[i] + b.coeff[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Fr::zero());
  for (size_t i = 0; i < a.coeff.size(); i++) r.coeff[i] = a.coeff[i];
  for (size_t i = 0; i < b.coeff.size(); i++) r.coeff[i] = r.coeff[i] - b.coeff[i];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  Poly r;
  r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, Fr::zero());
  for (size_t i = 0; i < a.coeff.size(); i++)
    for (size_t j = 0; j < b.coeff.size(); j++)
      r.coeff[i + j] = r.coeff[i + j] + a.coeff[i] * b.coeff[j];
  r.trim();
  return r;
}

Poly scale(const Poly& p, const Fr& s) {
  Poly r = p;
  for (auto& c : r.coeff) c = c * s;
  r.trim();
  return r;
}

std::pair<Poly, Fr> divide_linear(const Poly& p, const Fr& c) {
  if (p.is_zero()) return {Poly::zero(), Fr::zero()};
  Poly q;
  q.coeff.assign(p.coeff.size() - 1, Fr::zero());
  Fr carry = p.coeff.back();
  for (size_t i = p.coeff.size() - 1; i-- > 0;) {
    q.coeff[i] = carry;
    carry = p.coeff[i] + carry * c;
  }
  q.trim();
  return {q, carry};
}

std::pair<Poly, Poly> divide(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly r = p, q;
  if (p.coeff.size() >= d.coeff.size())
    q.coeff.assign(p.coeff.size() - d.coeff.size() + 1, Fr::zero());
  Fr lead_inv = d.coeff.back().inv();
  while (!r.is_zero() && r.coeff.size() >= d.coeff.size()) {
    size_t shift = r.coeff.size() - d.coeff.size();
    Fr f = r.coeff.back() * lead_inv;
    q.coeff[shift] = f;
    for (size_t i = 0; i < d.coeff.size(); i++)
      r.coeff[shift + i] = r.coeff[shift + i] - f * d.coeff[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly vanishing(const std::vector<Fr>& xs) {
  Poly acc = Poly::constant(Fr::one());
  for (const Fr& x : xs) {
    Poly lin;
    lin.coeff = {Fr::zero() - x, Fr::one()};
    acc = acc * lin;
  }
  return acc;
}

Poly interpolate(const std::vector<Fr>& xs, const std::vector<Fr>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate size mismatch");
  if (xs.empty()) return Poly::zero();
  Poly full = vanishing(xs);
  Poly acc;
  for (size_t i = 0; i < xs.size(); i++) {
    auto [num, rem] = divide_linear(full, xs[i]);
    (void)rem;  // zero by construction
    Fr denom = num.eval(xs[i]);
    acc = acc + scale(num, ys[i] * denom.inv());
  }
  return acc;
}

Poly lagrange_basis(size_t domain_size, size_t index) {
  if (index >= domain_size) throw std::out_of_range("lagrange index out of range");
  std::vector<Fr> xs, ys;
  xs.reserve(domain_size);
  ys.assign(domain_size, Fr::zero());
  for (size_t j = 0; j < domain_size; j++) xs.push_back(Fr::from_u64(j));
  ys[index] = Fr::one();
  return interpolate(xs, ys);
}

}  // namespace svc
