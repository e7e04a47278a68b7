#include "drinfeld/operators.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

const ModularMeta& require_meta(const UExpansion& f, const char* op) {
  if (!f.meta()) throw MissingMetadata(std::string(op) + " needs weight and type metadata");
  return *f.meta();
}

RatFunc power_of(const ConstantExtension& cx, const PolyA& a, std::int64_t e) {
  return RatFunc(a.lift(cx)).pow(e);
}

PolyA lcm(const PolyA& a, const PolyA& b) { return (a * b / gcd(a, b)).monic(); }

std::optional<std::size_t> generator_of(const QuotientRing& ring, const PolyA& prime) {
  const auto primes = carlitz_primes(ring);
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i] == prime) return i;
  return std::nullopt;
}

}  // namespace

const TorsionContext& joint_context(const ConstantExtension& cx, const PolyA& modulus, const QuotientRing& ring) {
  return TorsionContext::get(cx, modulus, carlitz_primes(ring));
}

UExpansion twist_raw(const UExpansion& f, const DirichletCharacter& chi) {
  return twist_raw(f, chi, joint_context(f.constants(), chi.modulus(), f.ring()));
}

UExpansion twist_raw(const UExpansion& f, const DirichletCharacter& chi, const TorsionContext& ctx) {
  const ModularMeta& meta = require_meta(f, "twist");
  if (!(chi.modulus() == ctx.modulus()))
    throw ConductorMismatch("character modulus " + chi.modulus().to_string() + " differs from context modulus " +
                            ctx.modulus().to_string());
  const ConstantExtension& cx = f.constants();
  const QuotientRing& R = ctx.ring();
  const DirichletCharacter inv = chi.inverse();
  std::vector<RingElem> weights;
  weights.reserve(ctx.residues().size());
  for (const auto& beta : ctx.residues()) weights.push_back(R.scalar(inv(beta)));
  const PolyA& n = ctx.modulus();
  UExpansion out = weighted_shift_sum(f, weights, ctx).scaled(power_of(cx, n, 2 * meta.type - meta.weight));

  ModularMeta m = meta;
  m.type = meta.type + static_cast<int>(chi.sign());
  const PolyA level = meta.level.is_zero() ? PolyA::one(cx.base()) : meta.level;
  m.level = lcm(level, n * n);
  m.nebentypus = meta.nebentypus ? *meta.nebentypus * chi * chi : chi * chi;
  return out.with_meta(m);
}

UExpansion twist_normalized(const UExpansion& f, const DirichletCharacter& chi) {
  return twist_normalized(f, chi, joint_context(f.constants(), chi.modulus(), f.ring()));
}

UExpansion twist_normalized(const UExpansion& f, const DirichletCharacter& chi, const TorsionContext& ctx) {
  if (!chi.primitive()) throw NotPrimitive("normalized twist needs a primitive character");
  const ModularMeta& meta = require_meta(f, "twist");
  const UExpansion raw = twist_raw(f, chi, ctx);
  const RingElem g = gauss_thakur(chi.inverse(), ctx);
  return raw.scaled(g).scaled(power_of(f.constants(), ctx.modulus(), meta.weight - 2 * meta.type - 1))
      .with_meta(raw.meta());
}

UExpansion twist_monomial_closed(std::size_t i, const DirichletCharacter& chi, const TorsionContext& ctx,
                                 std::size_t N) {
  if (!chi.primitive()) throw NotPrimitive("closed twist formula needs a primitive character");
  if (i == 0) throw InvalidArgument("monomial exponent must be positive");
  const ConstantExtension& cx = ctx.constants();
  const QuotientRing& R = ctx.ring();
  const std::uint32_t p = cx.ext().characteristic();
  const std::uint64_t q1 = cx.q() - 1;
  const RingElem scale = gauss_thakur(chi.inverse(), ctx).scaled(power_of(cx, ctx.modulus(), -1));
  UExpansion out(cx, R, N);
  for (std::size_t l = 1; i + l < N; ++l) {
    if (l % q1 != chi.sign()) continue;
    const std::uint32_t b = lucas_binomial(-static_cast<std::int64_t>(i), static_cast<std::int64_t>(l), p);
    if (b == 0) continue;
    out.set(i + l, (scale * char_sum_s(chi, l, ctx)).scaled(cx.ext().from_int(b)));
  }
  return out;
}

UExpansion hecke_u(const UExpansion& f, const PolyA& q) {
  return hecke_u(f, q, joint_context(f.constants(), q, f.ring()));
}

UExpansion hecke_u(const UExpansion& f, const PolyA& q, const TorsionContext& ctx_q) {
  const ModularMeta& meta = require_meta(f, "Hecke operator");
  if (!q.is_monic() || !is_irreducible(q)) throw InvalidArgument("Hecke prime must be monic irreducible");
  if (!(ctx_q.modulus() == q)) throw ConductorMismatch("torsion context is not for " + q.to_string());
  if (!meta.level.is_zero() && q.divides(meta.level)) throw LevelPrime(q.to_string() + " divides the level");
  const ConstantExtension& cx = f.constants();
  const std::size_t Q = q.abs();
  const std::size_t N_out = f.precision() / Q;
  if (N_out == 0) throw PrecisionTooSmall("input precision below |q| = " + std::to_string(Q));

  RatFunc dil = power_of(cx, q, meta.weight).scaled(meta.nebentypus_at(q));
  UExpansion out = rescale_arg(f.truncated(N_out), q).scaled(dil);

  std::vector<RingElem> ones(ctx_q.residues().size(), ctx_q.ring().one());
  const UExpansion shifted = descend(weighted_shift_sum(f, ones, ctx_q), q);
  const auto gq = generator_of(ctx_q.ring(), q);
  for (std::size_t n = 0; n < shifted.precision(); ++n)
    if (gq && !shifted[n].free_of(*gq))
      throw NotDescendable("Hecke image still depends on the " + q.to_string() + "-torsion", n);
  out += restrict_to(shifted, f.ring());
  return out.with_meta(meta);
}

AExpansion hecke_a(const AExpansion& F, const PolyA& q) {
  const ConstantExtension& cx = *F.cx;
  if (!q.is_monic() || !is_irreducible(q)) throw InvalidArgument("Hecke prime must be monic irreducible");
  if (!F.meta.level.is_zero() && q.divides(F.meta.level)) throw LevelPrime(q.to_string() + " divides the level");
  if (F.kind == AExpansion::Kind::Power && static_cast<std::uint32_t>(F.index) > cx.q())
    throw Unsupported("Hecke action on u(az)^i needs i <= q");
  const int D = F.degree_bound - q.degree();
  if (D < 0) throw InsufficientDegreeBound("degree bound " + std::to_string(F.degree_bound) + " below deg q");
  const RatFunc qg = power_of(cx, q, F.index);
  const RatFunc qk = power_of(cx, q, F.meta.weight).scaled(F.meta.nebentypus_at(q));
  AExpansion out = F;
  out.degree_bound = D;
  out.coeffs.clear();
  for (const auto& a : monics_up_to_degree(cx.base(), static_cast<unsigned>(D))) {
    RatFunc c(cx.ext());
    if (q.divides(a)) c += F.coefficient(a / q) * qk;
    else c += F.coefficient(a) * qg;
    if (!c.is_zero()) out.coeffs.emplace(a, c);
  }
  return out;
}

TwistedEisenstein hecke_twisted(const TwistedEisenstein& T, const PolyA& q) {
  const TorsionContext& ctx = *T.ctx;
  const ConstantExtension& cx = ctx.constants();
  if (!q.is_monic() || !is_irreducible(q)) throw InvalidArgument("Hecke prime must be monic irreducible");
  if (ctx.modulus().divides(q)) throw LevelPrime(q.to_string() + " is the level");
  const RatFunc qk = power_of(cx, q, T.weight);
  TwistedEisenstein out = T;
  out.weights.assign(T.weights.size(), RatFunc(cx.ext()));
  for (std::size_t idx = 0; idx < T.weights.size(); ++idx) {
    if (T.weights[idx].is_zero()) continue;
    out.weights[ctx.residue_index(q * ctx.residues()[idx])] = T.weights[idx] * qk;
  }
  return out;
}

AExpansion delta_sum(const AExpansion& F, const PolyA& n) {
  const ConstantExtension& cx = *F.cx;
  if (F.kind != AExpansion::Kind::Power) throw Unsupported("delta sum only for power-kind expansions");
  if (F.index < 1 || static_cast<std::uint32_t>(F.index) > cx.q())
    throw Unsupported("delta sum needs 1 <= i <= q");
  if (!n.is_monic()) throw InvalidArgument("modulus must be monic");
  const RatFunc ni = power_of(cx, n, F.index);
  AExpansion out = F;
  out.degree_bound = F.degree_bound + n.degree();
  out.coeffs.clear();
  for (const auto& [a, c] : F.coeffs)
    if (!c.is_zero() && gcd(a, n).is_one()) out.coeffs.emplace(a * n, c * ni);
  return out;
}

}  // namespace drinfeld
