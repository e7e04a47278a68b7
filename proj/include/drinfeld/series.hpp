#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/characters.hpp"
#include "drinfeld/goss.hpp"
#include "drinfeld/quotient_ring.hpp"

namespace drinfeld {

// Weight, type, level and nebentypus carried alongside an expansion.
struct ModularMeta {
  int weight = 0;
  int type = 0;
  PolyA level;
  std::optional<DirichletCharacter> nebentypus;

  // psi(q), or 1 without a nebentypus.
  Fe nebentypus_at(const PolyA& q) const;
};

// Truncated power series in u with coefficients in a torsion ring:
// coefficients of u^0..u^{N-1} are exact, nothing beyond is known.
class UExpansion {
 public:
  UExpansion(const ConstantExtension& cx, const QuotientRing& ring, std::size_t precision);
  UExpansion(const ConstantExtension& cx, const QuotientRing& ring, std::vector<RingElem> coeffs);
  static UExpansion monomial(const ConstantExtension& cx, const QuotientRing& ring, std::size_t i,
                             std::size_t precision);

  const ConstantExtension& constants() const { return *cx_; }
  const QuotientRing& ring() const { return *ring_; }
  std::size_t precision() const { return c_.size(); }
  const RingElem& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<RingElem>& coeffs() const { return c_; }
  void set(std::size_t i, RingElem value);

  const std::optional<ModularMeta>& meta() const { return meta_; }
  UExpansion with_meta(std::optional<ModularMeta> meta) const;

  // Index of the first nonzero coefficient.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }
  UExpansion truncated(std::size_t N) const;

  UExpansion& operator+=(const UExpansion& b);
  UExpansion& operator-=(const UExpansion& b);
  friend UExpansion operator+(UExpansion a, const UExpansion& b) { return a += b; }
  friend UExpansion operator-(UExpansion a, const UExpansion& b) { return a -= b; }
  friend UExpansion operator*(const UExpansion& a, const UExpansion& b);
  UExpansion operator-() const;
  UExpansion scaled(const RingElem& s) const;
  UExpansion scaled(const RatFunc& s) const;
  UExpansion scaled(Fe s) const;
  // Coefficients, ring and precision; metadata is not compared.
  friend bool operator==(const UExpansion& a, const UExpansion& b);

  std::string to_string(std::string_view var = "t", const std::vector<std::string>& names = {}) const;

 private:
  const ConstantExtension* cx_;
  const QuotientRing* ring_;
  std::vector<RingElem> c_;
  std::optional<ModularMeta> meta_;
};

UExpansion embed(const UExpansion& f, const QuotientRing& target);
UExpansion restrict_to(const UExpansion& f, const QuotientRing& target);

// 1/f; the constant term must be a unit.
UExpansion series_inverse(const UExpansion& f);
UExpansion series_power(const UExpansion& x, std::size_t n);
// f(x(u)) for x without constant term; precision min(f's reach, x's).
UExpansion compose(const UExpansion& f, const UExpansion& x);
// G(x(u)) for a polynomial G.
UExpansion compose(const GossPolynomial& G, const UExpansion& x);
// G evaluated at a ring element.
RingElem evaluate(const GossPolynomial& G, const RingElem& x);
// G as a series in X over the given ring.
UExpansion goss_series(const GossPolynomial& G, const ConstantExtension& cx, const QuotientRing& ring,
                       std::size_t precision);

// u(az) = u^{|a|} / sum_i [a]_i u^{|a|-q^i}, over F(theta).
UExpansion u_of_az(const ConstantExtension& cx, const PolyA& a, std::size_t precision);
// f(u / (lambda u + 1)): the argument shift z -> z + beta/n when lambda is
// the torsion value of beta.
UExpansion shift_by_value(const UExpansion& f, const RingElem& lambda);
UExpansion shift_by_torsion(const UExpansion& f, const PolyA& beta, const TorsionContext& ctx);
// sum_beta w_beta f(z + beta/n) over all residues, weights indexed like
// ctx.residues(); uses power sums of the torsion values.
UExpansion weighted_shift_sum(const UExpansion& f, const std::vector<RingElem>& weights, const TorsionContext& ctx);
// x / (lambda x + 1) computed by series arithmetic.
UExpansion mobius(const UExpansion& x, const RingElem& lambda);
// f(az).
UExpansion rescale_arg(const UExpansion& f, const PolyA& a);
// f(z) as a series in v = u(z/q), to v-precision N_v <= precision(f) |q|.
UExpansion to_subparameter(const UExpansion& f, const PolyA& q, std::size_t N_v);
// f((z + beta)/q) as a series in v = u(z/q), with ctx the q-torsion context.
UExpansion evaluate_at_shift(const UExpansion& f, const PolyA& beta, const TorsionContext& ctx);
// Inverse of to_subparameter at precision floor(N_v/|q|). Throws
// NotDescendable when g is not a series in u(z) = u(q (z/q)).
UExpansion descend(const UExpansion& g, const PolyA& q);

// sum over monic a of c_a u(az)^i (power kind) or c_a G_k(u(az)) (Goss kind).
struct AExpansion {
  enum class Kind { Power, Goss };

  const ConstantExtension* cx = nullptr;
  Kind kind = Kind::Power;
  int index = 1;
  ModularMeta meta;
  int degree_bound = 0;
  std::map<PolyA, RatFunc> coeffs;  // monic a with deg a <= degree_bound

  RatFunc coefficient(const PolyA& a) const;
  // Order of u(z)^i or G_k(u(z)) at u = 0.
  int term_order() const;
  // Smallest degree bound rendering exactly to precision N.
  int required_degree_bound(std::size_t N) const;
};

UExpansion render_a_expansion(const AExpansion& F, std::size_t N);
UExpansion render_a_expansion(const AExpansion& F, const QuotientRing& ring, std::size_t N);

// sum over c in A and units a mod p of w_a G_k(u(cz + a/p)), the constant
// term coming from c = 0.
struct TwistedEisenstein {
  int weight = 1;
  const TorsionContext* ctx = nullptr;
  std::optional<DirichletCharacter> character;
  std::vector<RatFunc> weights;  // indexed like ctx->residues(); zero off the units
  ModularMeta meta;
};

// Weights chi^{-1}(a); throws SignMismatch unless s_chi = -k mod (q - 1).
TwistedEisenstein make_twisted_eisenstein(const DirichletCharacter& chi, int k, const TorsionContext& ctx);
RingElem twisted_constant_term(const TwistedEisenstein& T);
UExpansion render_twisted_eisenstein(const TwistedEisenstein& T, std::size_t N);

}  // namespace drinfeld
