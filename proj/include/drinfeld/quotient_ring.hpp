#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/poly.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

// Monic relation x^d + c_{d-1} x^{d-1} + ... + c_0 = 0 for one generator,
// with coefficients in F[theta]. The tag identifies the generator across
// rings so elements can be moved between rings sharing it.
struct Relation {
  std::string tag;
  std::vector<Poly> coeffs;  // size d + 1, coeffs[d] == 1
  std::optional<PolyA> prime;  // set for Carlitz torsion relations

  std::size_t degree() const { return coeffs.size() - 1; }
};

class RingElem;

// F(theta)[x_1..x_r] / (R_1(x_1), ..., R_r(x_r)), one relation per
// generator. Instances are interned: one object per (field, relation tags),
// so rings compare by address.
class QuotientRing {
 public:
  // Relations are sorted by tag; tags must be unique.
  static const QuotientRing& get(const FiniteField& F, std::vector<Relation> relations);
  // F(theta) itself.
  static const QuotientRing& scalars(const FiniteField& F) { return get(F, {}); }

  QuotientRing(const QuotientRing&) = delete;
  QuotientRing& operator=(const QuotientRing&) = delete;

  const FiniteField& field() const { return *F_; }
  std::size_t generator_count() const { return rel_.size(); }
  const Relation& relation(std::size_t i) const { return rel_[i]; }
  std::size_t generator_degree(std::size_t i) const { return rel_[i].degree(); }
  std::size_t dim() const { return dim_; }
  std::optional<std::size_t> find(std::string_view tag) const;

  // Mixed-radix layout of the monomial basis; generator 0 varies fastest.
  std::vector<std::size_t> exponents(std::size_t index) const;
  std::size_t index(const std::vector<std::size_t>& exponents) const;
  std::size_t stride(std::size_t generator) const { return stride_[generator]; }

  RingElem zero() const;
  RingElem one() const;
  RingElem gen(std::size_t i) const;
  RingElem scalar(Fe c) const;
  RingElem scalar(const Poly& p) const;
  RingElem scalar(const RatFunc& r) const;
  // Reduces sum coeff * x^exps for arbitrary (unreduced) exponents.
  RingElem from_terms(const std::map<std::vector<std::size_t>, RatFunc>& terms) const;

  std::string describe() const;

 private:
  QuotientRing(const FiniteField& F, std::vector<Relation> relations);

  const FiniteField* F_;
  std::vector<Relation> rel_;
  std::vector<std::size_t> stride_;
  std::size_t dim_;
};

// Element of a QuotientRing: numerator polynomials per basis monomial over
// one common monic denominator, kept in lowest terms.
class RingElem {
 public:
  RingElem() = default;
  RingElem(const QuotientRing& ring, std::vector<Poly> num, Poly den);

  const QuotientRing& ring() const { return *ring_; }
  bool valid() const { return ring_ != nullptr; }
  const Poly& numerator(std::size_t i) const { return num_[i]; }
  const std::vector<Poly>& numerators() const { return num_; }
  const Poly& denominator() const { return den_; }
  RatFunc component(std::size_t i) const { return RatFunc(num_[i], den_); }

  bool is_zero() const;
  bool is_one() const { return is_scalar() && num_[0].is_one() && den_.is_one(); }
  // Only the constant monomial is present.
  bool is_scalar() const;
  bool is_integral() const { return den_.is_one(); }
  // True when no monomial involving the generator is present.
  bool free_of(std::size_t generator) const;
  RatFunc scalar_part() const { return component(0); }

  RingElem& operator+=(const RingElem& b);
  RingElem& operator-=(const RingElem& b);
  RingElem& operator*=(const RingElem& b) { return *this = *this * b; }
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;
  friend bool operator==(const RingElem& a, const RingElem& b);
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

  RingElem scaled(Fe s) const;
  RingElem scaled(const Poly& p) const;
  RingElem scaled(const RatFunc& r) const;
  RingElem pow(std::uint64_t e) const;

  // Generator names default to L1, L2, ...
  std::string to_string(std::string_view var = "t", const std::vector<std::string>& names = {}) const;

 private:
  void normalize();
  const QuotientRing* ring_ = nullptr;
  std::vector<Poly> num_;
  Poly den_;
};

// Inverse in the ring; throws NotInvertible when x is a zero divisor.
RingElem ring_invert(const RingElem& x);
// Moves x into a ring whose generators include all of x's ring's generators.
RingElem embed(const RingElem& x, const QuotientRing& target);
// Moves x into a ring with fewer generators; throws RingMismatch if x uses a
// generator missing from the target.
RingElem restrict_to(const RingElem& x, const QuotientRing& target);
// Ring homomorphism x_i -> images[i] (images live in one target ring).
RingElem substitute(const RingElem& x, const std::vector<RingElem>& images);

// Rank of a list of vectors over the ring, assumed to be a field. Throws
// NotInvertible if a nonzero pivot turns out not to be a unit.
std::size_t rank_over_field(std::vector<std::vector<RingElem>> rows);

}  // namespace drinfeld
