#pragma once

#include <memory>
#include <string>
#include <vector>

#include "drinfeld/finite_field.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/quotient_ring.hpp"

namespace drinfeld {

// Coefficients [a]_0..[a]_{deg a} of C_a(x) = sum [a]_i x^{q^i}.
using CarlitzCoeffs = std::vector<PolyA>;

CarlitzCoeffs carlitz_coeffs(const PolyA& a);
// Coefficients of the additive polynomial f(g(x)).
CarlitzCoeffs compose_additive(const CarlitzCoeffs& f, const CarlitzCoeffs& g);
// C_a(x) for x in a ring over the extension of cx.
RingElem carlitz_action(const PolyA& a, const RingElem& x, const ConstantExtension& cx);

// Relation C_p(x)/x for a monic prime p, lifted to the extension.
Relation carlitz_relation(const ConstantExtension& cx, const PolyA& prime);
// Tensor ring with one torsion generator per listed prime.
const QuotientRing& carlitz_ring(const ConstantExtension& cx, std::vector<PolyA> primes);
// Primes whose torsion generators a ring carries, in generator order.
std::vector<PolyA> carlitz_primes(const QuotientRing& ring);

// Carlitz n-torsion for a square-free monic modulus n, realized inside a
// Carlitz ring whose primes include those of n. Instances are interned and
// immutable.
class TorsionContext {
 public:
  // Ambient ring carries exactly the primes of n.
  static const TorsionContext& get(const ConstantExtension& cx, const PolyA& modulus);
  // Ambient ring carries the primes of n together with extra_primes.
  static const TorsionContext& get(const ConstantExtension& cx, const PolyA& modulus,
                                   const std::vector<PolyA>& extra_primes);

  TorsionContext(const TorsionContext&) = delete;
  TorsionContext& operator=(const TorsionContext&) = delete;

  const ConstantExtension& constants() const { return *cx_; }
  const QuotientRing& ring() const { return *ring_; }
  const PolyA& modulus() const { return modulus_; }
  const std::vector<PolyA>& primes() const { return primes_; }
  // Generator attached to the i-th prime of the modulus.
  const RingElem& prime_lambda(std::size_t i) const { return prime_lambda_[i]; }
  // lambda_n = sum_i C_{c_i}(lambda_i) with sum_i c_i n/p_i = 1 mod n.
  const RingElem& lambda() const { return lambda_; }

  // Residues of degree < deg n in code order.
  const std::vector<PolyA>& residues() const { return residues_; }
  std::size_t residue_index(const PolyA& beta) const;
  // C_beta(lambda_n) for the residue with the given index.
  const RingElem& exp_value(std::size_t index) const { return exp_values_[index]; }
  const RingElem& exp_value(const PolyA& beta) const { return exp_values_[residue_index(beta)]; }

  // Galois action lambda_i -> C_b(lambda_i) on the generators of n; other
  // generators of the ambient ring are fixed.
  RingElem galois(const RingElem& x, const PolyA& b) const;

 private:
  TorsionContext(const ConstantExtension& cx, const PolyA& modulus, std::vector<PolyA> ring_primes);

  const ConstantExtension* cx_;
  PolyA modulus_;
  std::vector<PolyA> primes_;
  const QuotientRing* ring_;
  std::vector<std::size_t> prime_generator_;
  std::vector<RingElem> prime_lambda_;
  RingElem lambda_;
  std::vector<PolyA> residues_;
  std::vector<RingElem> exp_values_;
};

}  // namespace drinfeld
