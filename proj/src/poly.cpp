#include "drinfeld/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "drinfeld/errors.hpp"

namespace drinfeld {

Poly::Poly(const FiniteField& F, std::vector<Fe> coeffs) : F_(&F), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const FiniteField& F, Fe c) { return Poly(F, std::vector<Fe>{c}); }

Poly Poly::monomial(const FiniteField& F, Fe c, std::size_t degree) {
  if (c == 0) return Poly(F);
  std::vector<Fe> v(degree + 1, 0);
  v[degree] = c;
  return Poly(F, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& b) {
  if (!F_) F_ = b.F_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = F_->add(c_[i], b.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  if (!F_) F_ = b.F_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = F_->sub(c_[i], b.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const FiniteField* F = a.F_ ? a.F_ : b.F_;
  if (a.is_zero() || b.is_zero()) return F ? Poly(*F) : Poly();
  Poly r(*F);
  r.add_product(a, b);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

Poly Poly::scaled(Fe s) const {
  if (s == 0) return Poly(*F_);
  Poly r = *this;
  for (auto& c : r.c_) c = F_->mul(c, s);
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Poly r(*F_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

void Poly::add_product(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!F_) F_ = a.F_;
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < n) c_.resize(n, 0);
  const FiniteField& F = *F_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const Fe ai = a.c_[i];
    if (ai == 0) continue;
    Fe* out = c_.data() + i;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      const Fe bj = b.c_[j];
      if (bj != 0) out[j] = F.add(out[j], F.mul(ai, bj));
    }
  }
  trim();
}

void Poly::sub_product(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!F_) F_ = a.F_;
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < n) c_.resize(n, 0);
  const FiniteField& F = *F_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const Fe ai = a.c_[i];
    if (ai == 0) continue;
    const Fe nai = F.neg(ai);
    Fe* out = c_.data() + i;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      const Fe bj = b.c_[j];
      if (bj != 0) out[j] = F.add(out[j], F.mul(nai, bj));
    }
  }
  trim();
}

void Poly::sub_scaled_shifted(const Poly& a, Fe s, std::size_t k) {
  if (a.is_zero() || s == 0) return;
  if (!F_) F_ = a.F_;
  if (c_.size() < a.c_.size() + k) c_.resize(a.c_.size() + k, 0);
  const FiniteField& F = *F_;
  const Fe ns = F.neg(s);
  for (std::size_t j = 0; j < a.c_.size(); ++j)
    if (a.c_[j] != 0) c_[j + k] = F.add(c_[j + k], F.mul(ns, a.c_[j]));
  trim();
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw NotInvertible("polynomial division by zero");
  const FiniteField& F = b.field();
  rem = a;
  if (!rem.F_) rem.F_ = &F;
  quot = Poly(F);
  if (a.degree() < b.degree()) return;
  const std::size_t db = b.c_.size() - 1;
  const Fe inv_lead = F.inv(b.lead());
  std::vector<Fe> q(rem.c_.size() - db, 0);
  std::vector<Fe>& r = rem.c_;
  for (std::size_t i = r.size(); i-- > db;) {
    const Fe c = r[i];
    if (c == 0) continue;
    const Fe f = F.mul(c, inv_lead);
    q[i - db] = f;
    const Fe nf = F.neg(f);
    for (std::size_t j = 0; j <= db; ++j)
      if (b.c_[j] != 0) r[i - db + j] = F.add(r[i - db + j], F.mul(nf, b.c_[j]));
  }
  rem.trim();
  quot = Poly(F, std::move(q));
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return q;
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return r;
}

bool Poly::divides(const Poly& b) const { return (b % *this).is_zero(); }

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(F_->inv(lead()));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(*F_, 1), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Fe Poly::eval(Fe x) const {
  Fe acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Fe c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += F_->to_string(c);
      continue;
    }
    if (c != 1) out += F_->to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  const FiniteField& F = a.has_field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, 1), s1(F);
  Poly t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    Poly q, r;
    Poly::divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = Poly(F);
    t = Poly(F);
    return r0;
  }
  const Fe li = F.inv(r0.lead());
  s = s0.scaled(li);
  t = t0.scaled(li);
  return r0.scaled(li);
}

PolyA::PolyA(Poly p) : p_(std::move(p)) {}

std::uint64_t PolyA::abs() const {
  if (is_zero()) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < degree(); ++i) r *= field().size();
  return r;
}

bool operator<(const PolyA& a, const PolyA& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly PolyA::lift(const ConstantExtension& cx) const {
  return p_.map_coeffs(cx.ext(), [&](Fe c) { return cx.embed(c); });
}

Fe PolyA::eval(const ConstantExtension& cx, Fe x) const {
  const FiniteField& E = cx.ext();
  Fe acc = 0;
  for (int i = degree(); i >= 0; --i) acc = E.add(E.mul(acc, x), cx.embed(p_[i]));
  return acc;
}

namespace {

struct Parser {
  std::string_view s;
  std::string_view var;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool at_var() {
    skip();
    return s.substr(pos, var.size()) == var;
  }
  bool at_digit() {
    skip();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::uint64_t number() {
    skip();
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > (1ull << 40)) throw ParseError("integer too large", start);
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError("expected an integer", start);
    return v;
  }
};

}  // namespace

PolyA PolyA::parse(const FiniteField& base, std::string_view text, std::string_view var) {
  if (base.degree() != 1)
    throw Unsupported("text form needs a prime constant field; got GF(" + std::to_string(base.size()) + ")");
  Parser ps{text, var};
  std::vector<std::int64_t> acc;
  bool first = true;
  ps.skip();
  if (ps.pos == text.size()) throw ParseError("empty polynomial", 0);
  while (true) {
    ps.skip();
    if (ps.pos == text.size()) break;
    int sign = 1;
    if (ps.peek('+') || ps.peek('-')) {
      sign = text[ps.pos] == '-' ? -1 : 1;
      ++ps.pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", ps.pos);
    }
    first = false;
    const std::size_t term_start = ps.pos;
    std::uint64_t coeff = 1, exponent = 0;
    bool has_coeff = false, has_var = false;
    if (ps.at_digit()) {
      coeff = ps.number();
      has_coeff = true;
      if (ps.peek('*')) {
        ++ps.pos;
        if (!ps.at_var()) throw ParseError("expected '" + std::string(var) + "' after '*'", ps.pos);
      }
    }
    if (ps.at_var()) {
      ps.pos += var.size();
      has_var = true;
      exponent = 1;
      if (ps.peek('^')) {
        ++ps.pos;
        if (!ps.at_digit()) throw ParseError("expected an exponent", ps.pos);
        exponent = ps.number();
        if (exponent > 4096) throw ParseError("exponent too large", ps.pos);
      }
    }
    if (!has_coeff && !has_var) throw ParseError("expected a term", term_start);
    if (acc.size() <= exponent) acc.resize(exponent + 1, 0);
    const std::int64_t p = base.characteristic();
    acc[exponent] = ((acc[exponent] + sign * static_cast<std::int64_t>(coeff % p)) % p + p) % p;
  }
  std::vector<Fe> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<Fe>(acc[i]);
  return PolyA(base, std::move(c));
}

PolyA gcd(const PolyA& a, const PolyA& b) { return PolyA(gcd(a.poly(), b.poly())); }

PolyA inverse_mod(const PolyA& a, const PolyA& m) {
  Poly s, t;
  Poly g = ext_gcd(a.poly() % m.poly(), m.poly(), s, t);
  if (!g.is_one()) throw NotInvertible(a.to_string() + " is not a unit modulo " + m.to_string());
  return PolyA(s % m.poly());
}

PolyA poly_from_code(const FiniteField& base, std::uint64_t code) {
  std::vector<Fe> c;
  while (code > 0) {
    c.push_back(static_cast<Fe>(code % base.size()));
    code /= base.size();
  }
  return PolyA(base, std::move(c));
}

std::uint64_t code_of(const PolyA& a) {
  std::uint64_t code = 0;
  for (int i = a.degree(); i >= 0; --i) code = code * a.field().size() + a[i];
  return code;
}

std::vector<PolyA> polys_below_degree(const FiniteField& base, unsigned d) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= base.size();
  std::vector<PolyA> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) out.push_back(poly_from_code(base, n));
  return out;
}

std::vector<PolyA> monics_of_degree(const FiniteField& base, unsigned d) {
  auto lower = polys_below_degree(base, d);
  const PolyA top(Poly::monomial(base, 1, d));
  for (auto& a : lower) a = a + top;
  return lower;
}

std::vector<PolyA> monics_up_to_degree(const FiniteField& base, unsigned d) {
  std::vector<PolyA> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto m = monics_of_degree(base, k);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

bool is_irreducible(const PolyA& a) {
  if (a.degree() < 1) return false;
  for (int d = 1; 2 * d <= a.degree(); ++d)
    for (const auto& m : monics_of_degree(a.field(), static_cast<unsigned>(d)))
      if (m.divides(a)) return false;
  return true;
}

std::vector<PolyA> squarefree_factors(const PolyA& a) {
  if (a.is_zero()) throw InvalidArgument("cannot factor zero");
  PolyA rest = a.monic();
  std::vector<PolyA> out;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const auto& m : monics_of_degree(a.field(), static_cast<unsigned>(d))) {
      if (!m.divides(rest)) continue;
      rest = rest / m;
      if (m.divides(rest)) throw NotSquareFree(a.to_string() + " has the repeated factor " + m.to_string());
      out.push_back(m);
    }
  }
  if (rest.degree() > 0) {
    for (const auto& f : out)
      if (f == rest) throw NotSquareFree(a.to_string() + " has the repeated factor " + f.to_string());
    out.push_back(rest);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t splitting_degree(const std::vector<PolyA>& primes) {
  std::uint32_t D = 1;
  for (const auto& p : primes) D = std::lcm(D, static_cast<std::uint32_t>(p.degree()));
  return D;
}

namespace {

std::uint32_t small_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den is a unit since k < p.
  std::uint64_t inv = 1, b = den, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = inv * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(num * inv % p);
}

}  // namespace

std::uint32_t lucas_binomial(std::int64_t n, std::int64_t k, std::uint32_t p) {
  if (k < 0) return 0;
  bool negate = false;
  std::uint64_t top;
  if (n < 0) {
    top = static_cast<std::uint64_t>(-n + k - 1);
    negate = (k % 2) == 1;
  } else {
    top = static_cast<std::uint64_t>(n);
  }
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  std::uint64_t r = 1;
  while (kk > 0 || top > 0) {
    r = r * small_binomial(top % p, kk % p, p) % p;
    if (r == 0) return 0;
    top /= p;
    kk /= p;
  }
  return negate ? static_cast<std::uint32_t>((p - r) % p) : static_cast<std::uint32_t>(r);
}

}  // namespace drinfeld
