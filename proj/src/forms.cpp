#include "drinfeld/forms.hpp"

#include <functional>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

RatFunc lifted(const ConstantExtension& cx, const PolyA& a) { return RatFunc(a.lift(cx)); }

const PolyA& single_prime(const DirichletCharacter& chi) {
  if (chi.factors().size() != 1) throw InvalidArgument("Eisenstein series need a character of prime modulus");
  return chi.factors()[0].prime;
}

void check_sign(const DirichletCharacter& chi, int k) {
  if (k < 1) throw InvalidArgument("weight must be positive");
  const std::uint64_t q1 = chi.constants().q() - 1;
  if ((chi.sign() + static_cast<std::uint64_t>(k)) % q1 != 0)
    throw SignMismatch("s_chi = " + std::to_string(chi.sign()) + " is not -" + std::to_string(k) + " mod " +
                       std::to_string(q1));
}

AExpansion power_expansion(const ConstantExtension& cx, int i, ModularMeta meta, int degree_bound,
                           const std::function<RatFunc(const PolyA&)>& coeff) {
  if (degree_bound < 0) throw InvalidArgument("degree bound must be non-negative");
  AExpansion F;
  F.cx = &cx;
  F.kind = AExpansion::Kind::Power;
  F.index = i;
  F.meta = std::move(meta);
  F.degree_bound = degree_bound;
  for (const auto& a : monics_up_to_degree(cx.base(), static_cast<unsigned>(degree_bound))) {
    RatFunc c = coeff(a);
    if (!c.is_zero()) F.coeffs.emplace(a, std::move(c));
  }
  return F;
}

ModularMeta twisted_meta(const ConstantExtension& cx, const ModularMeta& m, const DirichletCharacter& chi) {
  ModularMeta out = m;
  out.type = m.type + static_cast<int>(chi.sign());
  const PolyA n = chi.modulus();
  const PolyA level = m.level.is_zero() ? PolyA::one(cx.base()) : m.level;
  out.level = (level * n * n / gcd(level, n * n)).monic();
  out.nebentypus = m.nebentypus ? *m.nebentypus * chi * chi : chi * chi;
  return out;
}

bool vanishes_at(const RatFunc& r, Fe zeta) { return r.is_polynomial() && r.num().eval(zeta) == 0; }

RingElem gauss_over_modulus(const DirichletCharacter& chi, const TorsionContext& ctx) {
  return gauss_thakur(chi.inverse(), ctx).scaled(RatFunc(ctx.modulus().lift(ctx.constants())).inv());
}

}  // namespace

std::string FormSpec::name(std::string_view var) const {
  return std::visit(overloaded{
                        [](const spec::PetrovFs& f) { return "f_" + std::to_string(f.s); },
                        [](const spec::Delta&) { return std::string("Delta"); },
                        [](const spec::FalseEisenstein&) { return std::string("E"); },
                        [&](const spec::EisensteinEp& f) { return "E_p[" + f.p.to_string(var) + "]"; },
                        [&](const spec::FrickeEis& f) {
                          return "Ehat[" + f.chi.to_string(var) + "; k=" + std::to_string(f.k) + "]";
                        },
                        [&](const spec::TwistedEis& f) {
                          return "Etilde[" + f.chi.to_string(var) + "; k=" + std::to_string(f.k) + "]";
                        },
                        [&](const spec::RawTwistOf& f) {
                          return "raw_twist[" + f.form->name(var) + "; " + f.chi.to_string(var) + "]";
                        },
                        [&](const spec::NormalizedTwistOf& f) {
                          return "twist[" + f.form->name(var) + "; " + f.chi.to_string(var) + "]";
                        },
                    },
                    v);
}

FormSpec raw_twist_of(const FormSpec& f, const DirichletCharacter& chi) {
  return FormSpec{spec::RawTwistOf{std::make_shared<const FormSpec>(f), chi}};
}

FormSpec normalized_twist_of(const FormSpec& f, const DirichletCharacter& chi) {
  return FormSpec{spec::NormalizedTwistOf{std::make_shared<const FormSpec>(f), chi}};
}

ModularMeta form_meta(const ConstantExtension& cx, const FormSpec& f) {
  const int q = static_cast<int>(cx.q());
  const PolyA one = PolyA::one(cx.base());
  return std::visit(overloaded{
                        [&](const spec::PetrovFs& g) {
                          if (g.s < 1) throw InvalidArgument("f_s needs s >= 1; s = 0 is the false Eisenstein series");
                          return ModularMeta{2 + g.s * (q - 1), 1, one, std::nullopt};
                        },
                        [&](const spec::Delta&) { return ModularMeta{q * q - 1, 0, one, std::nullopt}; },
                        [&](const spec::FalseEisenstein&) { return ModularMeta{2, 1, one, std::nullopt}; },
                        [&](const spec::EisensteinEp& g) {
                          if (!g.p.is_monic() || !is_irreducible(g.p)) throw InvalidArgument("level must be a monic prime");
                          return ModularMeta{2, 1, g.p, std::nullopt};
                        },
                        [&](const spec::FrickeEis& g) {
                          return ModularMeta{g.k, g.k, single_prime(g.chi), g.chi.inverse()};
                        },
                        [&](const spec::TwistedEis& g) {
                          return ModularMeta{g.k, 0, single_prime(g.chi), g.chi};
                        },
                        [&](const spec::RawTwistOf& g) { return twisted_meta(cx, form_meta(cx, *g.form), g.chi); },
                        [&](const spec::NormalizedTwistOf& g) {
                          return twisted_meta(cx, form_meta(cx, *g.form), g.chi);
                        },
                    },
                    f.v);
}

AExpansion petrov_fs(const ConstantExtension& cx, int s, int degree_bound) {
  const ModularMeta meta = form_meta(cx, FormSpec{spec::PetrovFs{s}});
  const std::uint64_t e = 1 + static_cast<std::uint64_t>(s) * (cx.q() - 1);
  return power_expansion(cx, 1, meta, degree_bound, [&](const PolyA& a) { return lifted(cx, a.pow(e)); });
}

AExpansion delta_form(const ConstantExtension& cx, int degree_bound) {
  const ModularMeta meta = form_meta(cx, FormSpec{spec::Delta{}});
  const std::uint64_t e = cx.q() * (cx.q() - 1);
  return power_expansion(cx, static_cast<int>(cx.q()) - 1, meta, degree_bound,
                         [&](const PolyA& a) { return lifted(cx, a.pow(e)); });
}

AExpansion false_eisenstein(const ConstantExtension& cx, int degree_bound) {
  const ModularMeta meta = form_meta(cx, FormSpec{spec::FalseEisenstein{}});
  return power_expansion(cx, 1, meta, degree_bound, [&](const PolyA& a) { return lifted(cx, a); });
}

AExpansion eisenstein_ep(const ConstantExtension& cx, const PolyA& p, int degree_bound) {
  const ModularMeta meta = form_meta(cx, FormSpec{spec::EisensteinEp{p}});
  return power_expansion(cx, 1, meta, degree_bound, [&](const PolyA& a) {
    return gcd(a, p).is_one() ? lifted(cx, a) : RatFunc(cx.ext());
  });
}

AExpansion fricke_eisenstein(const DirichletCharacter& chi, int k, int degree_bound) {
  single_prime(chi);
  check_sign(chi, k);
  if (degree_bound < 0) throw InvalidArgument("degree bound must be non-negative");
  const ConstantExtension& cx = chi.constants();
  const DirichletCharacter inv = chi.inverse();
  AExpansion F;
  F.cx = &cx;
  F.kind = AExpansion::Kind::Goss;
  F.index = k;
  F.meta = ModularMeta{k, k, chi.modulus(), inv};
  F.degree_bound = degree_bound;
  for (const auto& c : monics_up_to_degree(cx.base(), static_cast<unsigned>(degree_bound))) {
    const Fe v = inv.on_units(c);
    if (v != 0) F.coeffs.emplace(c, RatFunc::constant(cx.ext(), v));
  }
  return F;
}

TwistedEisenstein twisted_eisenstein(const DirichletCharacter& chi, int k) {
  const PolyA& p = single_prime(chi);
  return make_twisted_eisenstein(chi, k, TorsionContext::get(chi.constants(), p));
}

bool has_a_expansion(const FormSpec& f) {
  return !std::holds_alternative<spec::TwistedEis>(f.v) && !std::holds_alternative<spec::RawTwistOf>(f.v) &&
         !std::holds_alternative<spec::NormalizedTwistOf>(f.v);
}

AExpansion build_a(const ConstantExtension& cx, const FormSpec& f, int degree_bound) {
  return std::visit(overloaded{
                        [&](const spec::PetrovFs& g) { return petrov_fs(cx, g.s, degree_bound); },
                        [&](const spec::Delta&) { return delta_form(cx, degree_bound); },
                        [&](const spec::FalseEisenstein&) { return false_eisenstein(cx, degree_bound); },
                        [&](const spec::EisensteinEp& g) { return eisenstein_ep(cx, g.p, degree_bound); },
                        [&](const spec::FrickeEis& g) {
                          if (!g.chi.primitive()) throw NotPrimitive("Ehat needs a primitive character");
                          return fricke_eisenstein(g.chi, g.k, degree_bound);
                        },
                        [&](const auto&) -> AExpansion {
                          throw InvalidArgument("form has no A-expansion: " + f.name());
                        },
                    },
                    f.v);
}

TwistedEisenstein build_twisted(const FormSpec& f) {
  const auto* g = std::get_if<spec::TwistedEis>(&f.v);
  if (!g) throw InvalidArgument("not a twisted Eisenstein series: " + f.name());
  if (!g->chi.primitive()) throw NotPrimitive("Etilde needs a primitive character");
  return twisted_eisenstein(g->chi, g->k);
}

UExpansion render(const ConstantExtension& cx, const FormSpec& f, std::size_t N) {
  if (has_a_expansion(f)) {
    const int D = build_a(cx, f, 0).required_degree_bound(N);
    return render_a_expansion(build_a(cx, f, D), N);
  }
  if (std::holds_alternative<spec::TwistedEis>(f.v)) return render_twisted_eisenstein(build_twisted(f), N);
  if (const auto* g = std::get_if<spec::RawTwistOf>(&f.v)) return twist_raw(render(cx, *g->form, N), g->chi);
  const auto& g = std::get<spec::NormalizedTwistOf>(f.v);
  return twist_normalized(render(cx, *g.form, N), g.chi);
}

RatFunc expected_eigenvalue(const ConstantExtension& cx, const FormSpec& f, const PolyA& q) {
  const RatFunc Q = lifted(cx, q);
  return std::visit(overloaded{
                        [&](const spec::Delta&) { return Q.pow(static_cast<std::int64_t>(cx.q()) - 1); },
                        [&](const spec::FrickeEis& g) { return Q.pow(g.k); },
                        [&](const spec::TwistedEis& g) { return Q.pow(g.k).scaled(g.chi(q)); },
                        [&](const spec::RawTwistOf& g) { return expected_eigenvalue(cx, *g.form, q).scaled(g.chi(q)); },
                        [&](const spec::NormalizedTwistOf& g) {
                          return expected_eigenvalue(cx, *g.form, q).scaled(g.chi(q));
                        },
                        [&](const auto&) { return Q; },
                    },
                    f.v);
}

std::optional<std::string> first_difference(const UExpansion& a, const UExpansion& b) {
  const std::size_t N = std::min(a.precision(), b.precision());
  if (&a.ring() != &b.ring()) return "series live in different rings";
  for (std::size_t n = 0; n < N; ++n)
    if (a[n] != b[n]) return "u^" + std::to_string(n) + ": " + a[n].to_string() + " != " + b[n].to_string();
  if (a.precision() != b.precision())
    return "precision " + std::to_string(a.precision()) + " != " + std::to_string(b.precision());
  return std::nullopt;
}

std::vector<VerificationReport> verify_eigensystem(const ConstantExtension& cx, const FormSpec& f,
                                                   const std::vector<PolyA>& qs, int degree_bound, std::size_t N) {
  std::vector<VerificationReport> out;
  for (const auto& q : qs) {
    VerificationReport r;
    r.identity = "eigen";
    r.params = {{"q", std::to_string(cx.q())}, {"form", f.name()}, {"hecke_prime", q.to_string()}};
    const RatFunc lambda = expected_eigenvalue(cx, f, q);
    r.params.emplace_back("eigenvalue", lambda.to_string());
    if (has_a_expansion(f)) {
      const AExpansion F = build_a(cx, f, degree_bound);
      const AExpansion H = hecke_a(F, q);
      r.params.emplace_back("degree_bound", std::to_string(H.degree_bound));
      r.precision = static_cast<std::size_t>(H.degree_bound);
      for (const auto& a : monics_up_to_degree(cx.base(), static_cast<unsigned>(H.degree_bound))) {
        const RatFunc got = H.coefficient(a);
        const RatFunc want = F.coefficient(a) * lambda;
        if (!(got == want)) {
          r.witness = "a=" + a.to_string() + ": " + got.to_string() + " != " + want.to_string();
          break;
        }
      }
    } else if (std::holds_alternative<spec::TwistedEis>(f.v)) {
      const TwistedEisenstein T = build_twisted(f);
      const TwistedEisenstein H = hecke_twisted(T, q);
      r.precision = T.weights.size();
      for (std::size_t i = 0; i < T.weights.size(); ++i) {
        const RatFunc want = T.weights[i] * lambda;
        if (!(H.weights[i] == want)) {
          r.witness = "a=" + T.ctx->residues()[i].to_string() + ": " + H.weights[i].to_string() +
                      " != " + want.to_string();
          break;
        }
      }
    } else {
      const UExpansion g = render(cx, f, N * q.abs());
      const UExpansion h = hecke_u(g, q);
      r.precision = h.precision();
      r.witness = first_difference(h, g.truncated(h.precision()).scaled(lambda));
    }
    r.pass = !r.witness;
    out.push_back(std::move(r));
  }
  return out;
}

RingElem eis_constant_term(const DirichletCharacter& chi, int k, const TorsionContext& ctx) {
  return twisted_constant_term(make_twisted_eisenstein(chi, k, ctx));
}

VerificationReport verify_eis_constant_term(const DirichletCharacter& chi, int k, const TorsionContext& ctx) {
  VerificationReport r;
  r.identity = "eis-constant-term";
  r.params = {{"q", std::to_string(ctx.constants().q())}, {"chi", chi.to_string()}, {"k", std::to_string(k)}};
  const RingElem c = eis_constant_term(chi, k, ctx);
  if (c.is_zero()) {
    r.witness = "constant term vanishes";
  } else {
    for (std::size_t i = 1; i < ctx.residues().size(); ++i) {
      const PolyA& b = ctx.residues()[i];
      if (!gcd(b, ctx.modulus()).is_one()) continue;
      if (ctx.galois(c, b) != c.scaled(chi(b))) {
        r.witness = "not a chi-eigenvector under b=" + b.to_string();
        break;
      }
    }
  }
  r.pass = !r.witness;
  return r;
}

DirichletCharacter congruence_character(const ConstantExtension& cx, const PolyA& p, int s) {
  if (s < 1) throw InvalidArgument("s must be at least 1");
  const std::uint64_t bound = 2 + static_cast<std::uint64_t>(s) * (cx.q() - 1);
  if (!(p.abs() > bound))
    throw InvalidArgument("|p| = " + std::to_string(p.abs()) + " must exceed 2 + s(q-1) = " + std::to_string(bound));
  return DirichletCharacter::power_of_root(cx, p, p.abs() - bound);
}

VerificationReport congruence_check(const ConstantExtension& cx, CongruenceKind kind, const PolyA& p, int s,
                                    std::size_t N) {
  const DirichletCharacter chi = congruence_character(cx, p, s);
  const Fe zeta = chi.factors()[0].root;
  VerificationReport r;
  r.identity = kind == CongruenceKind::SF ? "congruence-sf" : "congruence-twisted-sf";
  r.params = {{"q", std::to_string(cx.q())}, {"p", p.to_string()}, {"s", std::to_string(s)}, {"chi", chi.to_string()}};
  r.precision = N;
  const AExpansion fs0 = petrov_fs(cx, s, 0);
  const UExpansion fs = render_a_expansion(petrov_fs(cx, s, fs0.required_degree_bound(N)), N);
  if (kind == CongruenceKind::SF) {
    const int D = fricke_eisenstein(chi, 1, 0).required_degree_bound(N);
    const UExpansion diff = render_a_expansion(fricke_eisenstein(chi, 1, D), N) - fs;
    for (std::size_t n = 0; n < N && !r.witness; ++n)
      if (!vanishes_at(diff[n].scalar_part(), zeta))
        r.witness = "u^" + std::to_string(n) + ": " + diff[n].to_string() + " not divisible by (t - zeta)";
  } else {
    const TorsionContext& ctx = TorsionContext::get(cx, p);
    const UExpansion Et = render_twisted_eisenstein(make_twisted_eisenstein(chi, 1, ctx), N);
    const UExpansion lhs = (rescale_arg(Et, p) - Et).scaled(gauss_over_modulus(chi, ctx));
    const UExpansion diff = lhs - twist_normalized(fs, chi, ctx);
    for (std::size_t n = 0; n < N && !r.witness; ++n) {
      const RingElem& c = diff[n];
      if (!c.is_scalar()) r.witness = "u^" + std::to_string(n) + ": torsion part survives";
      else if (!vanishes_at(c.scalar_part(), zeta))
        r.witness = "u^" + std::to_string(n) + ": " + c.to_string() + " not divisible by (t - zeta)";
    }
  }
  r.pass = !r.witness;
  return r;
}

VerificationReport ehat_twist_identity(const DirichletCharacter& chi, int k, std::size_t N) {
  const ConstantExtension& cx = chi.constants();
  const PolyA& p = single_prime(chi);
  const TorsionContext& ctx = TorsionContext::get(cx, p);
  VerificationReport r;
  r.identity = "ehat-twist";
  r.params = {{"q", std::to_string(cx.q())}, {"chi", chi.to_string()}, {"k", std::to_string(k)}};
  r.precision = N;
  const int D = fricke_eisenstein(chi, k, 0).required_degree_bound(N);
  const UExpansion Eh = render_a_expansion(fricke_eisenstein(chi, k, D), N);
  const UExpansion lhs = twist_normalized(Eh, chi, ctx);
  const UExpansion Et = render_twisted_eisenstein(make_twisted_eisenstein(chi, k, ctx), N);
  const UExpansion rhs = (rescale_arg(Et, p) - Et).scaled(gauss_over_modulus(chi, ctx));
  r.witness = first_difference(lhs, rhs);
  r.pass = !r.witness;
  return r;
}

std::size_t eisenstein_rank(const ConstantExtension& cx, const PolyA& p, int k, std::size_t N) {
  const TorsionContext& ctx = TorsionContext::get(cx, p);
  const std::uint64_t q1 = cx.q() - 1;
  std::vector<std::vector<RingElem>> rows;
  for (const auto& chi : characters_mod(cx, p)) {
    if ((chi.sign() + static_cast<std::uint64_t>(k)) % q1 != 0) continue;
    const UExpansion Et = render_twisted_eisenstein(make_twisted_eisenstein(chi, k, ctx), N);
    const int D = fricke_eisenstein(chi, k, 0).required_degree_bound(N);
    const UExpansion Eh = embed(render_a_expansion(fricke_eisenstein(chi, k, D), N), ctx.ring());
    rows.push_back(Et.coeffs());
    rows.push_back(Eh.coeffs());
  }
  return rank_over_field(std::move(rows));
}

std::vector<RatFunc> local_l_factor(const RatFunc& lambda) {
  return {RatFunc::constant(lambda.num().field(), 1), -lambda};
}

}  // namespace drinfeld
