#pragma once

#include <string>
#include <string_view>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// Element of F(theta): reduced fraction with a monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const FiniteField& F) : num_(F), den_(Poly::constant(F, 1)) {}
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const FiniteField& F, Fe c) { return RatFunc(Poly::constant(F, c)); }

  const FiniteField& field() const { return den_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc& operator+=(const RatFunc& b);
  RatFunc& operator-=(const RatFunc& b);
  RatFunc& operator*=(const RatFunc& b);
  RatFunc& operator/=(const RatFunc& b);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inv() const;
  RatFunc pow(std::int64_t e) const;
  RatFunc scaled(Fe s) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace drinfeld
