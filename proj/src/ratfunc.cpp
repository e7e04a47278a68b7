#include "drinfeld/ratfunc.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw NotInvertible("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field(), 1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  if (den_.lead() != 1) {
    const Fe li = den_.field().inv(den_.lead());
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_ == b.den_) {
    num_ += b.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = Poly::constant(den_.field(), 1);
    return *this;
  }
  num_ = num_ * b.den_ + b.num_ * den_;
  den_ = den_ * b.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& b) { return *this += -b; }

RatFunc& RatFunc::operator*=(const RatFunc& b) {
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = b;
  if (den_.is_one() && b.den_.is_one()) {
    num_ = num_ * b.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  Poly g1 = gcd(num_, b.den_), g2 = gcd(b.num_, den_);
  num_ = (num_ / g1) * (b.num_ / g2);
  den_ = (den_ / g2) * (b.den_ / g1);
  if (den_.lead() != 1) {
    const Fe li = den_.field().inv(den_.lead());
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& b) { return *this *= b.inv(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw NotInvertible("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<std::uint64_t>(e));
  r.den_ = den_.pow(static_cast<std::uint64_t>(e));
  return r;
}

RatFunc RatFunc::scaled(Fe s) const {
  RatFunc r = *this;
  r.num_ = r.num_.scaled(s);
  if (r.num_.is_zero()) r.den_ = Poly::constant(den_.field(), 1);
  return r;
}

std::string RatFunc::to_string(std::string_view var) const {
  if (den_.is_one()) return num_.to_string(var);
  auto wrap = [&](const Poly& p) {
    std::string s = p.to_string(var);
    const bool simple = p.coeffs().size() <= 1 || (p.coeffs().size() == 2 && p[0] == 0 && p[1] == 1) ||
                        s.find('+') == std::string::npos;
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace drinfeld
