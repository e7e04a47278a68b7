// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "drinfeld/errors.hpp"
#include "drinfeld/forms.hpp"
#include "drinfeld/suites.hpp"

using namespace drinfeld;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void expect_report(const VerificationReport& r) {
  if (!r.pass) throw Failure{r.to_text()};
}

const FiniteField& F(std::uint32_t p) { return FiniteField::get(p, 1); }
PolyA P(std::uint32_t p, const char* text) { return PolyA::parse(F(p), text); }
RatFunc lift(const ConstantExtension& cx, const PolyA& a) { return RatFunc(a.lift(cx)); }

std::vector<PolyA> primes_up_to(const FiniteField& base, unsigned d) {
  std::vector<PolyA> out;
  for (const auto& a : monics_up_to_degree(base, d))
    if (a.degree() >= 1 && is_irreducible(a)) out.push_back(a);
  return out;
}

bool valid_sign(const DirichletCharacter& chi, int k) {
  return (chi.sign() + static_cast<std::uint64_t>(k)) % (chi.constants().q() - 1) == 0;
}

// 1. Table against the reference list.
void c1() {
  const auto got = table_pairs(5, P(5, "t^2+2"), 23);
  const std::set<TablePair> a(got.begin(), got.end());
  const std::set<TablePair> b(golden_table().begin(), golden_table().end());
  expect(a == b, "table has " + std::to_string(a.size()) + " pairs, reference " + std::to_string(b.size()));
}

// 2. Brute-force convolution against the Jacobi closed form.
void c2() {
  for (const char* m : {"t", "t^2+1", "t^2+t"}) {
    const PolyA n = P(3, m);
    const ConstantExtension& cx = ConstantExtension::get(3, splitting_degree(squarefree_factors(n)));
    const auto chars = characters_mod(cx, n, true);
    expect(!chars.empty(), "no primitive characters mod " + n.to_string());
    for (const auto& a : chars)
      for (const auto& b : chars) {
        const JacobiFactor jf = jacobi_factor(a, b);
        for (const auto& d : polys_below_degree(cx.base(), static_cast<unsigned>(n.degree())))
          expect(convolve(a, b, d) == cx.ext().mul(jf.factor, jf.product(d)),
                 a.to_string() + " * " + b.to_string() + " at " + d.to_string());
      }
  }
}

// 3. Eigensystems through the coefficient engines, plus the u-expansion
// engine on the twisted Eisenstein series.
void c3() {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const auto qs = primes_up_to(cx.base(), 2);
  const int D = 3;
  auto run = [&](const FormSpec& f, const PolyA* level) {
    for (const auto& q : qs) {
      if (level && level->divides(q)) continue;
      expect_report(verify_eigensystem(cx, f, {q}, D, 9).front());
    }
  };
  for (int s : {1, 2, 3}) run(FormSpec{spec::PetrovFs{s}}, nullptr);
  run(FormSpec{spec::Delta{}}, nullptr);
  for (const char* ptext : {"t", "t^2+1"}) {
    const PolyA p = P(3, ptext);
    run(FormSpec{spec::EisensteinEp{p}}, &p);
    for (const auto& chi : characters_mod(cx, p, true))
      for (int k = 1; k <= 3; ++k) {
        if (!valid_sign(chi, k)) continue;
        run(FormSpec{spec::FrickeEis{chi, k}}, &p);
        run(FormSpec{spec::TwistedEis{chi, k}}, &p);
        // Same eigenvalue seen on the rendered series.
        const UExpansion E = render(cx, FormSpec{spec::TwistedEis{chi, k}}, 27);
        for (const auto& q : primes_up_to(cx.base(), 1)) {
          if (q == p) continue;
          const UExpansion h = hecke_u(E, q);
          const RatFunc lambda = lift(cx, q).pow(k).scaled(chi(q));
          expect(!first_difference(h, E.truncated(9).scaled(lambda)),
                 "T_q Etilde at u-level, " + chi.to_string() + " k=" + std::to_string(k) + " q=" + q.to_string());
        }
      }
  }
}

// 4. u-expansion Hecke engine against the A-expansion engine.
void c4() {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = P(3, "t^2+1");
  std::vector<AExpansion> forms = {petrov_fs(cx, 1, 3), delta_form(cx, 3), eisenstein_ep(cx, p, 3)};
  for (const auto& chi : characters_mod(cx, p, true))
    for (int k = 1; k <= 3; ++k)
      if (valid_sign(chi, k)) forms.push_back(fricke_eisenstein(chi, k, 3));
  for (const auto& F : forms)
    for (const char* qt : {"t", "t+1"}) {
      const PolyA q = P(3, qt);
      const UExpansion lhs = hecke_u(render_a_expansion(F, 27), q);
      const UExpansion rhs = render_a_expansion(hecke_a(F, q), lhs.precision());
      const auto diff = first_difference(lhs, rhs);
      expect(!diff, "Hecke engines disagree at q=" + q.to_string() + ": " + diff.value_or(""));
    }
}

// 5. Twist commutes with T_q up to chi(q).
void c5() {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA n = P(3, "t+1");
  const PolyA q = P(3, "t");
  const UExpansion f = render(cx, FormSpec{spec::PetrovFs{1}}, 27);
  for (const auto& chi : characters_mod(cx, n, true)) {
    const UExpansion lhs = hecke_u(twist_raw(f, chi), q);
    const UExpansion rhs = twist_raw(hecke_u(f, q), chi).scaled(chi(q));
    expect(lhs.precision() >= 9, "output precision below 9");
    const auto diff = first_difference(lhs, rhs);
    expect(!diff, chi.to_string() + ": " + diff.value_or(""));
    expect(!lhs.is_zero(), "twist of f_1 vanished");
  }
}

// 6. Closed form of the normalized twist of u^i, and integrality of the
// normalized twist of f_1.
void c6() {
  for (const auto& [q, text] : std::vector<std::pair<std::uint32_t, const char*>>{{3, "t"}, {5, "t^2+2"}}) {
    const PolyA n = P(q, text);
    const ConstantExtension& cx = ConstantExtension::get(q, static_cast<std::uint32_t>(n.degree()));
    const TorsionContext& ctx = TorsionContext::get(cx, n);
    const UExpansion f1 = render(cx, FormSpec{spec::PetrovFs{1}}, 30);
    for (const auto& chi : characters_mod(cx, n, true)) {
      for (std::size_t i = 1; i <= 5; ++i) {
        const UExpansion u = UExpansion::monomial(cx, QuotientRing::scalars(cx.ext()), i, 30)
                                 .with_meta(ModularMeta{3, 2, PolyA::one(cx.base()), std::nullopt});
        const auto diff = first_difference(twist_normalized(u, chi, ctx), twist_monomial_closed(i, chi, ctx, 30));
        expect(!diff, chi.to_string() + " i=" + std::to_string(i) + ": " + diff.value_or(""));
      }
      const UExpansion t = twist_normalized(f1, chi, ctx);
      for (std::size_t k = 0; k < t.precision(); ++k)
        expect(t[k].is_scalar() && t[k].is_integral(),
               chi.to_string() + ": coefficient of u^" + std::to_string(k) + " is " + t[k].to_string());
    }
  }
}

// 7. Composition of two raw twists.
void c7() {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA n = P(3, "t");
  const TorsionContext& ctx = TorsionContext::get(cx, n);
  const std::uint32_t p = cx.ext().characteristic();
  const ModularMeta meta{4, 1, PolyA::one(cx.base()), std::nullopt};
  const UExpansion u = UExpansion::monomial(cx, QuotientRing::scalars(cx.ext()), 1, 20).with_meta(meta);
  const UExpansion f1 = render(cx, FormSpec{spec::PetrovFs{1}}, 20);
  for (const UExpansion& f : {u, f1}) {
    const int k = f.meta()->weight;
    const int m = f.meta()->type;
    for (const auto& c1 : characters_mod(cx, n, true))
      for (const auto& c2 : characters_mod(cx, n, true)) {
        const int s1 = static_cast<int>(c1.sign());
        Fe jac = 1;
        for (std::size_t i = 0; i < c1.factors().size(); ++i) {
          const std::int64_t ji = static_cast<std::int64_t>(c1.factors()[i].exponent);
          const std::int64_t ki = static_cast<std::int64_t>(c2.factors()[i].exponent);
          const std::int64_t size = static_cast<std::int64_t>(c1.factors()[i].prime.abs());
          Fe term = cx.ext().from_int(lucas_binomial(size - 1 - ki, ji, p));
          if ((ji + 1) % 2 != 0) term = cx.ext().neg(term);
          jac = cx.ext().mul(jac, term);
        }
        const RatFunc scalar = lift(cx, n).pow(2 * s1 + 2 * m - k).scaled(jac);
        const UExpansion lhs = twist_raw(twist_raw(f, c1, ctx), c2, ctx);
        const UExpansion rhs = twist_raw(f, c1 * c2, ctx).scaled(scalar);
        const auto diff = first_difference(lhs, rhs);
        expect(!diff, c1.to_string() + ", " + c2.to_string() + ": " + diff.value_or(""));
      }
  }
}

// 8. Distribution lemma by direct series arithmetic in v = u(z/q): every
// shifted argument goes through x / (lambda x + 1) and composition with G_k.
void c8() {
  const PolyA p = P(3, "t^2+1");
  const PolyA q = P(3, "t");
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const TorsionContext& cp = TorsionContext::get(cx, p, {q});
  const TorsionContext& cq = TorsionContext::get(cx, q, {p});
  expect(&cp.ring() == &cq.ring(), "joint rings differ");
  const QuotientRing& R = cp.ring();
  const std::size_t Nv = 27;
  const RatFunc qpow = lift(cx, q);
  for (int k = 1; k <= 3; ++k) {
    const GossPolynomial& G = goss_poly(cx, k);
    for (const auto& c : polys_below_degree(cx.base(), 2)) {
      for (std::size_t ai = 1; ai < cp.residues().size(); ++ai) {
        const PolyA& a = cp.residues()[ai];
        const bool coprime = gcd(c, q).is_one();
        if (c.is_zero()) {
          RingElem lhs = R.zero();
          for (std::size_t b = 0; b < cq.residues().size(); ++b) lhs += evaluate(G, ring_invert(cp.exp_value(a)));
          expect(lhs.is_zero(), "c = 0 sum does not vanish");
          continue;
        }
        const UExpansion Uc = embed(u_of_az(cx, c, Nv), R);
        UExpansion lhs(cx, R, Nv);
        for (const auto& beta : cq.residues()) {
          const RingElem shift = cq.exp_value(c * beta) + cp.exp_value(a);
          lhs += compose(G, mobius(Uc, shift));
        }
        UExpansion rhs(cx, R, Nv);
        if (coprime) {
          const UExpansion Ucq = embed(u_of_az(cx, c * q, Nv), R);
          rhs = compose(G, mobius(Ucq, cp.exp_value(a * q))).scaled(qpow.pow(k));
        }
        const auto diff = first_difference(lhs, rhs);
        expect(!diff, "k=" + std::to_string(k) + " c=" + c.to_string() + " a=" + a.to_string() + ": " +
                          diff.value_or(""));
      }
    }
  }
}

// 9. Congruences modulo (t - zeta).
void c9() {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = P(3, "t^2+1");
  expect_report(congruence_check(cx, CongruenceKind::SF, p, 1, 30));
  expect_report(congruence_check(cx, CongruenceKind::TwistedSF, p, 1, 30));
}

// 10. Twist of Ehat against the difference of twisted Eisenstein series.
void c10() {
  {
    const ConstantExtension& cx = ConstantExtension::get(3, 1);
    for (const auto& chi : characters_mod(cx, P(3, "t"), true))
      if (valid_sign(chi, 1)) expect_report(ehat_twist_identity(chi, 1, 20));
  }
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  std::size_t checked = 0;
  for (const auto& chi : characters_mod(cx, P(3, "t^2+1"), true))
    for (int k = 1; k <= 2; ++k)
      if (valid_sign(chi, k)) {
        expect_report(ehat_twist_identity(chi, k, 20));
        ++checked;
      }
  expect(checked == 7, "expected 7 primitive (chi, k) pairs at t^2+1, got " + std::to_string(checked));
}

// 11. Rank of the Eisenstein space.
void c11() {
  for (const auto& [text, N] : std::vector<std::pair<const char*, std::size_t>>{{"t^2+1", 36}, {"t", 12}}) {
    const PolyA p = P(3, text);
    const ConstantExtension& cx = ConstantExtension::get(3, static_cast<std::uint32_t>(p.degree()));
    const std::size_t expected = 2 * (p.abs() - 1) / 2;
    for (int k = 1; k <= 3; ++k) {
      const std::size_t r = eisenstein_rank(cx, p, k, N);
      expect(r == expected, std::string(text) + " k=" + std::to_string(k) + ": rank " + std::to_string(r));
    }
  }
}

// 12. Constant terms and nonvanishing twists.
void c12() {
  for (const char* text : {"t", "t+1", "t^2+1"}) {
    const PolyA p = P(3, text);
    const ConstantExtension& cx = ConstantExtension::get(3, static_cast<std::uint32_t>(p.degree()));
    const TorsionContext& ctx = TorsionContext::get(cx, p);
    for (const auto& chi : characters_mod(cx, p))
      for (int k = 1; k <= 4; ++k)
        if (valid_sign(chi, k)) expect_report(verify_eis_constant_term(chi, k, ctx));
  }
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA n = P(3, "t+1");
  const std::vector<FormSpec> forms = {FormSpec{spec::PetrovFs{1}}, FormSpec{spec::Delta{}},
                                       FormSpec{spec::EisensteinEp{P(3, "t")}}};
  for (const auto& chi : characters_mod(cx, n, true))
    for (const auto& f : forms)
      expect(!render(cx, normalized_twist_of(f, chi), 30).is_zero(), "twist of " + f.name() + " vanishes");
}

// 13. Goss polynomials: two constructions and monomial support.
void c13() {
  for (std::uint32_t q : {3u, 5u}) {
    const ConstantExtension& cx = ConstantExtension::get(q, 1);
    for (int k = 1; k <= static_cast<int>(4 * q); ++k) {
      const GossPolynomial a = goss_poly_recursive(cx, k);
      expect(a == goss_poly_generating(cx, k), "constructions differ at k=" + std::to_string(k));
      for (std::size_t j = 0; j < a.coeffs.size(); ++j)
        if (!a.coeffs[j].is_zero())
          expect(j >= 1 && j % (q - 1) == static_cast<std::size_t>(k) % (q - 1),
                 "G_" + std::to_string(k) + " has X^" + std::to_string(j));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"1 table reproduction", c1},
      {"2 convolution lemma", c2},
      {"3 eigensystems", c3},
      {"4 Hecke engine cross-validation", c4},
      {"5 twist-Hecke commutation", c5},
      {"6 normalized projection closed form", c6},
      {"7 twist composition", c7},
      {"8 distribution lemma", c8},
      {"9 congruences", c9},
      {"10 Ehat twist identity", c10},
      {"11 Eisenstein rank", c11},
      {"12 constant terms and nonvanishing", c12},
      {"13 Goss polynomial oracles", c13},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      fn();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (ok ? "PASS" : "FAIL") << " criterion " << name << " (" << secs << " s)";
    if (!ok) line << ": " << detail;
    std::cout << line.str() << std::endl;
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
