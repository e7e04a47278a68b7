#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/finite_field.hpp"

namespace drinfeld {

// Dense univariate polynomial over a finite field, low-to-high coefficients
// with no trailing zeros. The variable is the function-field variable theta.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FiniteField& F) : F_(&F) {}
  Poly(const FiniteField& F, std::vector<Fe> coeffs);

  static Poly constant(const FiniteField& F, Fe c);
  static Poly monomial(const FiniteField& F, Fe c, std::size_t degree);
  static Poly variable(const FiniteField& F) { return monomial(F, 1, 1); }

  const FiniteField& field() const { return *F_; }
  bool has_field() const { return F_ != nullptr; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  Fe lead() const { return c_.empty() ? 0 : c_.back(); }
  Fe operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Fe>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(Fe s) const;
  Poly shifted(std::size_t k) const;
  // this += a * b, and this -= a * b, without temporaries.
  void add_product(const Poly& a, const Poly& b);
  void sub_product(const Poly& a, const Poly& b);
  void sub_scaled_shifted(const Poly& a, Fe s, std::size_t k);

  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  bool divides(const Poly& b) const;

  Poly monic() const;
  Poly pow(std::uint64_t e) const;
  Fe eval(Fe x) const;
  // Applies a field map coefficientwise (used for embeddings and Frobenius).
  template <class Map>
  Poly map_coeffs(const FiniteField& target, Map&& f) const {
    std::vector<Fe> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f(c_[i]);
    return Poly(target, std::move(out));
  }

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  const FiniteField* F_ = nullptr;
  std::vector<Fe> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
// Returns g = gcd(a, b) monic, with s*a + t*b = g.
Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t);

class ConstantExtension;

// Element of A = F_q[theta].
class PolyA {
 public:
  PolyA() = default;
  explicit PolyA(Poly p);
  PolyA(const FiniteField& base, std::vector<Fe> coeffs) : PolyA(Poly(base, std::move(coeffs))) {}

  static PolyA constant(const FiniteField& base, Fe c) { return PolyA(Poly::constant(base, c)); }
  static PolyA theta(const FiniteField& base) { return PolyA(Poly::variable(base)); }
  static PolyA one(const FiniteField& base) { return constant(base, 1); }
  // Text form such as "t^2+2*t+1" or "t^2 + 2t + 1"; coefficients are
  // integers reduced into F_p. Throws ParseError with the offending position.
  static PolyA parse(const FiniteField& base, std::string_view text, std::string_view var = "t");

  const Poly& poly() const { return p_; }
  const FiniteField& field() const { return p_.field(); }
  int degree() const { return p_.degree(); }
  bool is_zero() const { return p_.is_zero(); }
  bool is_one() const { return p_.is_one(); }
  bool is_monic() const { return !p_.is_zero() && p_.lead() == 1; }
  Fe lead() const { return p_.lead(); }
  Fe operator[](std::size_t i) const { return p_[i]; }
  // |a| = q^deg a; zero for a = 0.
  std::uint64_t abs() const;

  friend PolyA operator+(const PolyA& a, const PolyA& b) { return PolyA(a.p_ + b.p_); }
  friend PolyA operator-(const PolyA& a, const PolyA& b) { return PolyA(a.p_ - b.p_); }
  friend PolyA operator*(const PolyA& a, const PolyA& b) { return PolyA(a.p_ * b.p_); }
  friend PolyA operator/(const PolyA& a, const PolyA& b) { return PolyA(a.p_ / b.p_); }
  friend PolyA operator%(const PolyA& a, const PolyA& b) { return PolyA(a.p_ % b.p_); }
  PolyA operator-() const { return PolyA(-p_); }
  PolyA scaled(Fe s) const { return PolyA(p_.scaled(s)); }
  PolyA pow(std::uint64_t e) const { return PolyA(p_.pow(e)); }
  PolyA monic() const { return PolyA(p_.monic()); }
  bool divides(const PolyA& b) const { return p_.divides(b.p_); }
  friend bool operator==(const PolyA& a, const PolyA& b) { return a.p_ == b.p_; }
  // Degree first, then coefficients from the top; a total order for maps.
  friend bool operator<(const PolyA& a, const PolyA& b);

  Poly lift(const ConstantExtension& cx) const;
  Fe eval(const ConstantExtension& cx, Fe x) const;
  std::string to_string(std::string_view var = "t") const { return p_.to_string(var); }

 private:
  Poly p_;
};

PolyA gcd(const PolyA& a, const PolyA& b);
// Inverse of a modulo m; throws NotInvertible if they share a factor.
PolyA inverse_mod(const PolyA& a, const PolyA& m);

// Canonical enumeration of residues: code n with base-q digits d_0, d_1, ...
// (little-endian) is the polynomial sum d_i theta^i.
PolyA poly_from_code(const FiniteField& base, std::uint64_t code);
std::uint64_t code_of(const PolyA& a);
// All polynomials of degree < d in code order.
std::vector<PolyA> polys_below_degree(const FiniteField& base, unsigned d);
// All monic polynomials of degree exactly d: theta^d + poly_from_code(n).
std::vector<PolyA> monics_of_degree(const FiniteField& base, unsigned d);
// Monic polynomials of degree <= d, by degree then code.
std::vector<PolyA> monics_up_to_degree(const FiniteField& base, unsigned d);

bool is_irreducible(const PolyA& a);
// Monic irreducible factors of a square-free polynomial, sorted. Throws
// NotSquareFree when a repeated factor occurs.
std::vector<PolyA> squarefree_factors(const PolyA& a);
// Ground-field extension degree needed to split every listed prime.
std::uint32_t splitting_degree(const std::vector<PolyA>& primes);

// Binomial coefficient C(n, k) reduced mod p, for any integer n and k >= 0;
// negative n uses C(-i, k) = (-1)^k C(i + k - 1, k).
std::uint32_t lucas_binomial(std::int64_t n, std::int64_t k, std::uint32_t p);

}  // namespace drinfeld
