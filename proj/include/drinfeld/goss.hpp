#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/finite_field.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

class PolyA;

// Polynomial in X with coefficients in F(theta); coeffs[j] multiplies X^j.
struct GossPolynomial {
  std::vector<RatFunc> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  // Smallest j with a nonzero X^j coefficient; -1 for zero.
  int valuation() const;
  std::string to_string(std::string_view var = "t") const;
  friend bool operator==(const GossPolynomial& a, const GossPolynomial& b) { return a.coeffs == b.coeffs; }
};

// D_i = (theta^{q^i} - theta) D_{i-1}^q, D_0 = 1, over the extension field.
Poly carlitz_factorial(const ConstantExtension& cx, unsigned i);

// G_k for the Carlitz lattice by the recursion with alpha_i = 1/D_i.
GossPolynomial goss_poly_recursive(const ConstantExtension& cx, int k);
// G_k from the generating identity with e(y) = sum y^{q^i}/D_i.
GossPolynomial goss_poly_generating(const ConstantExtension& cx, int k);
// Cached G_k; the sequence is computed by both routes and cross-checked
// (InternalError on disagreement). Throws InvalidArgument for k <= 0.
const GossPolynomial& goss_poly(const ConstantExtension& cx, int k);
// Goss polynomial of index i for the Carlitz n-torsion lattice, i <= q only.
GossPolynomial goss_poly_torsion(const ConstantExtension& cx, const PolyA& modulus, int i);

}  // namespace drinfeld
