#include "drinfeld/series.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

Fe ModularMeta::nebentypus_at(const PolyA& q) const { return nebentypus ? nebentypus->on_units(q) : Fe{1}; }

UExpansion::UExpansion(const ConstantExtension& cx, const QuotientRing& ring, std::size_t precision)
    : cx_(&cx), ring_(&ring), c_(precision, ring.zero()) {
  if (&ring.field() != &cx.ext()) throw RingMismatch("coefficient ring is not over the constant extension");
}

UExpansion::UExpansion(const ConstantExtension& cx, const QuotientRing& ring, std::vector<RingElem> coeffs)
    : cx_(&cx), ring_(&ring), c_(std::move(coeffs)) {
  if (&ring.field() != &cx.ext()) throw RingMismatch("coefficient ring is not over the constant extension");
  for (const auto& c : c_)
    if (&c.ring() != ring_) throw RingMismatch("series coefficient from another ring");
}

UExpansion UExpansion::monomial(const ConstantExtension& cx, const QuotientRing& ring, std::size_t i,
                                std::size_t precision) {
  UExpansion f(cx, ring, precision);
  if (i < precision) f.c_[i] = ring.one();
  return f;
}

void UExpansion::set(std::size_t i, RingElem value) {
  if (&value.ring() != ring_) throw RingMismatch("series coefficient from another ring");
  c_.at(i) = std::move(value);
}

UExpansion UExpansion::with_meta(std::optional<ModularMeta> meta) const {
  UExpansion f = *this;
  f.meta_ = std::move(meta);
  return f;
}

std::optional<std::size_t> UExpansion::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return std::nullopt;
}

UExpansion UExpansion::truncated(std::size_t N) const {
  UExpansion f = *this;
  if (N < f.c_.size()) f.c_.resize(N);
  return f;
}

namespace {

void require_same(const UExpansion& a, const UExpansion& b) {
  if (&a.ring() != &b.ring())
    throw RingMismatch("series over different rings: " + a.ring().describe() + " vs " + b.ring().describe());
}

}  // namespace

UExpansion& UExpansion::operator+=(const UExpansion& b) {
  require_same(*this, b);
  if (b.c_.size() < c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

UExpansion& UExpansion::operator-=(const UExpansion& b) {
  require_same(*this, b);
  if (b.c_.size() < c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

UExpansion operator*(const UExpansion& a, const UExpansion& b) {
  require_same(a, b);
  const std::size_t N = std::min(a.precision(), b.precision());
  UExpansion r(a.constants(), a.ring(), N);
  for (std::size_t i = 0; i < N; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < N; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

UExpansion UExpansion::operator-() const {
  UExpansion f = *this;
  for (auto& c : f.c_) c = -c;
  return f;
}

UExpansion UExpansion::scaled(const RingElem& s) const {
  if (&s.ring() != ring_) throw RingMismatch("scalar from another ring");
  UExpansion f = *this;
  for (auto& c : f.c_)
    if (!c.is_zero()) c = c * s;
  return f;
}

UExpansion UExpansion::scaled(const RatFunc& s) const {
  UExpansion f = *this;
  for (auto& c : f.c_)
    if (!c.is_zero()) c = c.scaled(s);
  return f;
}

UExpansion UExpansion::scaled(Fe s) const {
  UExpansion f = *this;
  for (auto& c : f.c_) c = c.scaled(s);
  return f;
}

bool operator==(const UExpansion& a, const UExpansion& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

std::string UExpansion::to_string(std::string_view var, const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].to_string(var, names);
    if (!out.empty()) out += " + ";
    int depth = 0;
    bool bare = true;
    for (char ch : c) {
      if (ch == '(') ++depth;
      else if (ch == ')') --depth;
      else if (depth == 0 && (ch == '+' || ch == '/' || ch == ' ')) bare = false;
    }
    if (i == 0) {
      out += c;
    } else {
      const std::string mono = i == 1 ? "u" : "u^" + std::to_string(i);
      if (c == "1") out += mono;
      else out += (bare ? c : "(" + c + ")") + "*" + mono;
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(u^" + std::to_string(c_.size()) + ")";
}

UExpansion embed(const UExpansion& f, const QuotientRing& target) {
  std::vector<RingElem> c;
  c.reserve(f.precision());
  for (const auto& x : f.coeffs()) c.push_back(embed(x, target));
  return UExpansion(f.constants(), target, std::move(c)).with_meta(f.meta());
}

UExpansion restrict_to(const UExpansion& f, const QuotientRing& target) {
  std::vector<RingElem> c;
  c.reserve(f.precision());
  for (const auto& x : f.coeffs()) c.push_back(restrict_to(x, target));
  return UExpansion(f.constants(), target, std::move(c)).with_meta(f.meta());
}

UExpansion series_inverse(const UExpansion& f) {
  const std::size_t N = f.precision();
  UExpansion r(f.constants(), f.ring(), N);
  if (N == 0) return r;
  const RingElem c0inv = ring_invert(f[0]);
  std::vector<RingElem> inv(N, f.ring().zero());
  inv[0] = c0inv;
  for (std::size_t n = 1; n < N; ++n) {
    RingElem acc = f.ring().zero();
    for (std::size_t j = 1; j <= n; ++j)
      if (!f[j].is_zero() && !inv[n - j].is_zero()) acc += f[j] * inv[n - j];
    inv[n] = -(acc * c0inv);
  }
  return UExpansion(f.constants(), f.ring(), std::move(inv));
}

UExpansion series_power(const UExpansion& x, std::size_t n) {
  UExpansion r = UExpansion::monomial(x.constants(), x.ring(), 0, x.precision());
  UExpansion base = x;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

UExpansion compose(const UExpansion& f, const UExpansion& x) {
  require_same(f, x);
  const auto v = x.valuation();
  if (v && *v == 0) throw InvalidArgument("composition needs a series without constant term");
  const std::size_t N = v ? std::min(x.precision(), f.precision() * *v) : x.precision();
  UExpansion acc(f.constants(), f.ring(), N);
  UExpansion xt = x.truncated(N);
  UExpansion power = UExpansion::monomial(f.constants(), f.ring(), 0, N);
  for (std::size_t i = 0; i < f.precision(); ++i) {
    if (i > 0) {
      if (!v || i * *v >= N) break;
      power = power * xt;
    }
    if (!f[i].is_zero()) acc += power.scaled(f[i]);
  }
  return acc;
}

UExpansion compose(const GossPolynomial& G, const UExpansion& x) {
  const auto v = x.valuation();
  if (v && *v == 0) throw InvalidArgument("composition needs a series without constant term");
  const std::size_t N = x.precision();
  UExpansion acc(x.constants(), x.ring(), N);
  UExpansion power = UExpansion::monomial(x.constants(), x.ring(), 0, N);
  for (std::size_t j = 0; j < G.coeffs.size(); ++j) {
    if (j > 0) {
      if (!v || j * *v >= N) break;
      power = power * x;
    }
    if (!G.coeffs[j].is_zero()) acc += power.scaled(G.coeffs[j]);
  }
  return acc;
}

RingElem evaluate(const GossPolynomial& G, const RingElem& x) {
  const QuotientRing& R = x.ring();
  RingElem acc = R.zero();
  for (std::size_t j = G.coeffs.size(); j-- > 0;) {
    acc = acc * x;
    if (!G.coeffs[j].is_zero()) acc += R.scalar(G.coeffs[j]);
  }
  return acc;
}

UExpansion goss_series(const GossPolynomial& G, const ConstantExtension& cx, const QuotientRing& ring,
                       std::size_t precision) {
  UExpansion f(cx, ring, precision);
  for (std::size_t j = 0; j < G.coeffs.size() && j < precision; ++j)
    if (!G.coeffs[j].is_zero()) f.set(j, ring.scalar(G.coeffs[j]));
  return f;
}

UExpansion u_of_az(const ConstantExtension& cx, const PolyA& a, std::size_t precision) {
  if (a.is_zero()) throw InvalidArgument("u(az) needs a nonzero a");
  const QuotientRing& R = QuotientRing::scalars(cx.ext());
  const std::uint64_t size = a.abs();
  UExpansion out(cx, R, precision);
  if (size >= precision) return out;
  // Denominator sum_i [a]_i u^{|a| - q^i}, needed to precision N - |a|.
  const std::size_t M = precision - size;
  UExpansion den(cx, R, M);
  const auto coeffs = carlitz_coeffs(a);
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i, qi *= cx.q()) {
    const std::uint64_t e = size - qi;
    if (e < M && !coeffs[i].is_zero()) den.set(e, R.scalar(coeffs[i].lift(cx)));
  }
  const UExpansion inv = series_inverse(den);
  for (std::size_t n = 0; n < M; ++n) out.set(n + size, inv[n]);
  return out;
}

UExpansion shift_by_value(const UExpansion& f, const RingElem& lambda) {
  const QuotientRing& R = f.ring();
  if (&lambda.ring() != &R) throw RingMismatch("shift value from another ring");
  const std::size_t N = f.precision();
  const std::uint32_t p = R.field().characteristic();
  std::vector<RingElem> lp(N, R.one());
  for (std::size_t l = 1; l < N; ++l) lp[l] = lp[l - 1] * lambda;
  UExpansion out(f.constants(), R, N);
  for (std::size_t n = 0; n < N; ++n) {
    RingElem acc = R.zero();
    for (std::size_t i = (n == 0 ? 0 : 1); i <= n; ++i) {
      if (f[i].is_zero() || lp[n - i].is_zero()) continue;
      const std::uint32_t b = lucas_binomial(-static_cast<std::int64_t>(i), static_cast<std::int64_t>(n - i), p);
      if (b != 0) acc += (f[i] * lp[n - i]).scaled(R.field().from_int(b));
    }
    out.set(n, std::move(acc));
  }
  return out;
}

UExpansion shift_by_torsion(const UExpansion& f, const PolyA& beta, const TorsionContext& ctx) {
  const UExpansion g = embed(f, ctx.ring());
  return shift_by_value(g, ctx.exp_value(beta)).with_meta(f.meta());
}

UExpansion weighted_shift_sum(const UExpansion& f0, const std::vector<RingElem>& weights, const TorsionContext& ctx) {
  const UExpansion f = embed(f0, ctx.ring());
  const QuotientRing& R = ctx.ring();
  if (weights.size() != ctx.residues().size()) throw InvalidArgument("one weight per residue expected");
  const std::size_t N = f.precision();
  const std::uint32_t p = R.field().characteristic();
  // Power sums S_l = sum_beta w_beta lambda_beta^l.
  std::vector<RingElem> S(N, R.zero());
  for (std::size_t b = 0; b < weights.size(); ++b) {
    if (weights[b].is_zero()) continue;
    RingElem term = embed(weights[b], R);
    for (std::size_t l = 0; l < N; ++l) {
      if (l > 0) term = term * ctx.exp_value(b);
      if (term.is_zero()) break;
      S[l] += term;
    }
  }
  UExpansion out(f.constants(), R, N);
  for (std::size_t n = 0; n < N; ++n) {
    RingElem acc = R.zero();
    for (std::size_t i = 0; i <= n; ++i) {
      if (f[i].is_zero() || S[n - i].is_zero()) continue;
      const std::uint32_t b = lucas_binomial(-static_cast<std::int64_t>(i), static_cast<std::int64_t>(n - i), p);
      if (b != 0) acc += (f[i] * S[n - i]).scaled(R.field().from_int(b));
    }
    out.set(n, std::move(acc));
  }
  return out;
}

UExpansion mobius(const UExpansion& x, const RingElem& lambda) {
  UExpansion den = x.scaled(lambda);
  if (den.precision() > 0) den.set(0, den[0] + x.ring().one());
  return x * series_inverse(den);
}

UExpansion rescale_arg(const UExpansion& f, const PolyA& a) {
  const UExpansion U = embed(u_of_az(f.constants(), a, f.precision()), f.ring());
  return compose(f, U);
}

UExpansion to_subparameter(const UExpansion& f, const PolyA& q, std::size_t N_v) {
  if (N_v > f.precision() * q.abs())
    throw PrecisionTooSmall("sub-parameter precision " + std::to_string(N_v) + " exceeds " +
                            std::to_string(f.precision() * q.abs()));
  const UExpansion U = embed(u_of_az(f.constants(), q, N_v), f.ring());
  return compose(f, U);
}

UExpansion evaluate_at_shift(const UExpansion& f, const PolyA& beta, const TorsionContext& ctx) {
  // f((z+beta)/q) = f(w + beta/q) with w = z/q and v = u(w).
  return shift_by_value(embed(f, ctx.ring()), ctx.exp_value(beta));
}

UExpansion descend(const UExpansion& g, const PolyA& q) {
  const std::size_t Q = q.abs();
  const std::size_t J = g.precision() / Q;
  if (J == 0) throw PrecisionTooSmall("v-precision " + std::to_string(g.precision()) + " below |q| = " + std::to_string(Q));
  const std::size_t Nv = J * Q;
  const UExpansion U = embed(u_of_az(g.constants(), q, Nv), g.ring());
  UExpansion r = g.truncated(Nv);
  UExpansion power = UExpansion::monomial(g.constants(), g.ring(), 0, Nv);
  UExpansion out(g.constants(), g.ring(), J);
  for (std::size_t j = 0; j < J; ++j) {
    if (j > 0) power = power * U;
    // U^j = v^{jQ} (1 + ...): the leading coefficient is 1.
    const RingElem c = r[j * Q];
    if (!c.is_zero()) {
      r -= power.scaled(c);
      out.set(j, c);
    }
  }
  if (auto v = r.valuation())
    throw NotDescendable("series is not a function of u(q z/q)", *v);
  return out.with_meta(g.meta());
}

RatFunc AExpansion::coefficient(const PolyA& a) const {
  if (a.degree() > degree_bound) throw InsufficientDegreeBound("coefficient beyond the degree bound");
  auto it = coeffs.find(a);
  return it == coeffs.end() ? RatFunc(cx->ext()) : it->second;
}

int AExpansion::term_order() const {
  if (kind == Kind::Power) return index;
  return goss_poly(*cx, index).valuation();
}

int AExpansion::required_degree_bound(std::size_t N) const {
  const std::uint64_t v = static_cast<std::uint64_t>(term_order());
  int D = 0;
  std::uint64_t size = cx->q();
  while (v * size < N) {
    ++D;
    size *= cx->q();
  }
  return D;
}

UExpansion render_a_expansion(const AExpansion& F, std::size_t N) {
  return render_a_expansion(F, QuotientRing::scalars(F.cx->ext()), N);
}

UExpansion render_a_expansion(const AExpansion& F, const QuotientRing& ring, std::size_t N) {
  const ConstantExtension& cx = *F.cx;
  const std::uint64_t v = static_cast<std::uint64_t>(F.term_order());
  std::uint64_t reach = v;
  for (int d = 0; d <= F.degree_bound; ++d) reach *= cx.q();
  if (reach < N)
    throw InsufficientDegreeBound("degree bound " + std::to_string(F.degree_bound) + " cannot render precision " +
                                  std::to_string(N));
  UExpansion acc(cx, ring, N);
  for (const auto& [a, c] : F.coeffs) {
    if (c.is_zero() || v * a.abs() >= N) continue;
    const UExpansion U = embed(u_of_az(cx, a, N), ring);
    const UExpansion term = F.kind == AExpansion::Kind::Power ? series_power(U, static_cast<std::size_t>(F.index))
                                                               : compose(goss_poly(cx, F.index), U);
    acc += term.scaled(c);
  }
  return acc.with_meta(F.meta);
}

TwistedEisenstein make_twisted_eisenstein(const DirichletCharacter& chi, int k, const TorsionContext& ctx) {
  if (k < 1) throw InvalidArgument("Eisenstein weight must be positive");
  if (ctx.primes().size() != 1) throw Unsupported("twisted Eisenstein series need a prime level");
  if (!(chi.modulus() == ctx.modulus()))
    throw ConductorMismatch("character modulus " + chi.modulus().to_string() + " differs from level " +
                            ctx.modulus().to_string());
  const std::uint64_t q1 = chi.constants().q() - 1;
  if ((chi.sign() + static_cast<std::uint64_t>(k)) % q1 != 0)
    throw SignMismatch("sign " + std::to_string(chi.sign()) + " is not -" + std::to_string(k) + " mod " +
                       std::to_string(q1));
  const FiniteField& E = chi.constants().ext();
  const DirichletCharacter inv = chi.inverse();
  TwistedEisenstein T;
  T.weight = k;
  T.ctx = &ctx;
  T.character = chi;
  for (const auto& a : ctx.residues()) T.weights.push_back(RatFunc::constant(E, inv.on_units(a)));
  T.meta = ModularMeta{k, 0, ctx.modulus(), chi};
  return T;
}

RingElem twisted_constant_term(const TwistedEisenstein& T) {
  const TorsionContext& ctx = *T.ctx;
  const GossPolynomial& G = goss_poly(ctx.constants(), T.weight);
  RingElem acc = ctx.ring().zero();
  for (std::size_t idx = 1; idx < ctx.residues().size(); ++idx) {
    if (T.weights[idx].is_zero()) continue;
    acc += evaluate(G, ring_invert(ctx.exp_value(idx))).scaled(T.weights[idx]);
  }
  return acc;
}

UExpansion render_twisted_eisenstein(const TwistedEisenstein& T, std::size_t N) {
  const TorsionContext& ctx = *T.ctx;
  const ConstantExtension& cx = ctx.constants();
  const FiniteField& base = cx.base();
  const QuotientRing& R = ctx.ring();
  if (T.character) {
    const std::uint64_t q1 = cx.q() - 1;
    if ((T.character->sign() + static_cast<std::uint64_t>(T.weight)) % q1 != 0)
      throw SignMismatch("character sign incompatible with the weight");
  }
  const int k = T.weight;
  const GossPolynomial& G = goss_poly(cx, k);

  // Weights for c running over monic polynomials: W_a = sum_eps w_{eps a} eps^{-k}.
  std::vector<RingElem> W(ctx.residues().size(), R.zero());
  for (std::size_t idx = 1; idx < ctx.residues().size(); ++idx) {
    RatFunc acc(cx.ext());
    for (Fe eps = 1; eps < base.size(); ++eps) {
      const std::size_t j = ctx.residue_index(ctx.residues()[idx].scaled(eps));
      if (T.weights[j].is_zero()) continue;
      acc += T.weights[j].scaled(cx.embed(base.pow(eps, -k)));
    }
    W[idx] = R.scalar(acc);
  }
  // P(X) = sum_a W_a G_k(X / (lambda_a X + 1)).
  const UExpansion P = weighted_shift_sum(goss_series(G, cx, R, N), W, ctx);

  // sum over monic c of P(u(cz)) = sum_n P_n sum_c u(cz)^n.
  const std::size_t v = static_cast<std::size_t>(std::max(1, G.valuation()));
  const QuotientRing& S = QuotientRing::scalars(cx.ext());
  std::vector<UExpansion> power_sums(N, UExpansion(cx, S, N));
  for (unsigned d = 0;; ++d) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < d; ++i) size *= cx.q();
    if (v * size >= N) break;
    for (const auto& c : monics_of_degree(base, d)) {
      const UExpansion U = u_of_az(cx, c, N);
      UExpansion power = series_power(U, v);
      for (std::size_t n = v; n * size < N; ++n) {
        if (n > v) power = power * U;
        power_sums[n] += power;
      }
    }
  }
  UExpansion acc(cx, R, N);
  for (std::size_t n = v; n < N; ++n)
    if (!P[n].is_zero()) acc += embed(power_sums[n], R).scaled(P[n]);
  if (N > 0) acc.set(0, acc[0] + twisted_constant_term(T));
  return acc.with_meta(T.meta);
}

}  // namespace drinfeld
