#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/quotient_ring.hpp"

namespace drinfeld {

// Smallest-code root of a monic prime inside the extension field.
Fe canonical_root(const ConstantExtension& cx, const PolyA& prime);

// a -> prod_i a(zeta_i)^{e_i} for roots zeta_i of distinct monic primes.
class DirichletCharacter {
 public:
  struct Factor {
    PolyA prime;
    Fe root;
    std::uint64_t exponent;  // 0 <= exponent < |prime| - 1
  };

  // Factors are sorted by prime; duplicate primes are rejected.
  DirichletCharacter(const ConstantExtension& cx, std::vector<Factor> factors);
  // Character of modulus 1.
  static DirichletCharacter trivial(const ConstantExtension& cx) { return DirichletCharacter(cx, {}); }
  // chi_zeta^e with the canonical root of the prime.
  static DirichletCharacter power_of_root(const ConstantExtension& cx, const PolyA& prime, std::uint64_t e);

  const ConstantExtension& constants() const { return *cx_; }
  const std::vector<Factor>& factors() const { return factors_; }
  PolyA modulus() const;
  std::vector<PolyA> primes() const;
  // (sum e_i) mod (q - 1).
  std::uint64_t sign() const;
  bool primitive() const;
  bool is_trivial() const;

  DirichletCharacter inverse() const;
  // Value with the 0^0 = 1 convention for zero exponents.
  Fe operator()(const PolyA& a) const;
  // Value as a Dirichlet character modulo modulus(): zero off the units.
  Fe on_units(const PolyA& a) const;

  // Same character expressed with different roots of the same primes.
  DirichletCharacter with_roots(const std::vector<Fe>& roots) const;

  std::string to_string(std::string_view var = "t") const;
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);

 private:
  const ConstantExtension* cx_;
  std::vector<Factor> factors_;
};

// Pointwise product; factors at a shared prime combine exponents.
DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
// Every character with the given primes (exponents 0..|p|-2), exponent
// vectors in lexicographic order; with primitive_only the exponents start at 1.
std::vector<DirichletCharacter> characters_mod(const ConstantExtension& cx, const PolyA& modulus,
                                               bool primitive_only = false);

// Parsed form of "chi{p=t^2+2; zeta=auto; e=5}"; p/e/zeta may repeat for
// several primes.
struct CharacterLiteral {
  std::vector<PolyA> primes;
  std::vector<std::optional<Fe>> roots;  // nullopt = canonical root
  std::vector<std::uint64_t> exponents;
};
CharacterLiteral parse_character_literal(const FiniteField& base, std::string_view text, std::string_view var = "t");
DirichletCharacter character_from_literal(const ConstantExtension& cx, const CharacterLiteral& lit);

// sum over |a| < |n| of chi1(a) chi2(delta - a), by brute force.
Fe convolve(const DirichletCharacter& chi1, const DirichletCharacter& chi2, const PolyA& delta);

struct JacobiFactor {
  Fe factor;
  DirichletCharacter product;
};
// Closed form of the convolution: (chi1 * chi2)(delta) = factor * product(delta).
JacobiFactor jacobi_factor(const DirichletCharacter& chi1, const DirichletCharacter& chi2);

// Gauss-Thakur sum as a product over base-q digits of basic sums; lives in
// ctx.ring(). Requires a primitive character with ctx modulus = conductor.
RingElem gauss_thakur(const DirichletCharacter& chi, const TorsionContext& ctx);
// sum over residues beta of chi^{-1}(beta) exp_value(beta)^k.
RingElem char_sum_s(const DirichletCharacter& chi, std::uint64_t k, const TorsionContext& ctx);

}  // namespace drinfeld
