#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "svc/fields.hpp"

namespace svc {

// Dense univariate polynomial over the scalar field, coefficients low to high.
// Invariant: trailing coefficient nonzero unless the polynomial is zero
// (empty coefficient vector).
struct Poly {
  std::vector<Fr> coeff;

  Poly() = default;
  explicit Poly(std::vector<Fr> c) : coeff(std::move(c)) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly constant(const Fr& a) {
    Poly p;
    if (!(a == Fr::zero())) p.coeff.push_back(a);
    return p;
  }

  bool is_zero() const { return coeff.empty(); }
  // Degree of the zero polynomial is reported as 0 for bound checks.
  size_t degree() const { return coeff.empty() ? 0 : coeff.size() - 1; }

  void trim() {
    while (!coeff.empty() && coeff.back() == Fr::zero()) coeff.pop_back();
  }

  Fr eval(const Fr& x) const {
    Fr acc = Fr::zero();
    for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + coeff[i];
    return acc;
  }

  bool operator==(const Poly& o) const { return coeff == o.coeff; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& p, const Fr& s);

// Quotient and remainder of p by the linear factor (X - c); the remainder
// equals p(c) by synthetic division.
std::pair<Poly, Fr> divide_linear(const Poly& p, const Fr& c);

// Long division: p = q*d + r with deg r < deg d. d must be nonzero.
std::pair<Poly, Poly> divide(const Poly& p, const Poly& d);

// Product of (X - x) over the given points.
Poly vanishing(const std::vector<Fr>& xs);

// Unique polynomial of degree < n through the n points (xs must be distinct).
Poly interpolate(const std::vector<Fr>& xs, const std::vector<Fr>& ys);

// Lagrange basis polynomial over the integer domain {0, ..., domain_size-1}:
// value 1 at `index`, 0 at the other domain points.
Poly lagrange_basis(size_t domain_size, size_t index);

}  // namespace svc
