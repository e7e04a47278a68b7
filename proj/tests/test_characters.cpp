#include <gtest/gtest.h>

#include "drinfeld/characters.hpp"
#include "drinfeld/errors.hpp"

using namespace drinfeld;

namespace {

PolyA A(std::uint32_t p, const char* s) { return PolyA::parse(FiniteField::get(p, 1), s); }

}  // namespace

TEST(Characters, TrivialAndRootCharacter) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const FiniteField& E = cx.ext();
  for (const auto& a : polys_below_degree(cx.base(), 3)) {
    if (a.is_zero()) continue;
    EXPECT_EQ(DirichletCharacter::trivial(cx)(a), 1u);
  }
  const PolyA p = A(3, "t^2+1");
  const auto chi = DirichletCharacter::power_of_root(cx, p, 1);
  const Fe zeta = canonical_root(cx, p);
  EXPECT_EQ(p.eval(cx, zeta), 0u);
  EXPECT_EQ(chi(PolyA::theta(cx.base())), zeta);
  EXPECT_EQ(chi(p), 0u);
  EXPECT_EQ(chi(p * A(3, "t+2")), 0u);
  EXPECT_EQ(chi(A(3, "t+1")), E.add(zeta, 1));
}

TEST(Characters, SignExamples) {
  const ConstantExtension& cx5 = ConstantExtension::get(5, 2);
  EXPECT_EQ(DirichletCharacter::power_of_root(cx5, A(5, "t^2+2"), 5).sign(), 1u);
  EXPECT_EQ(DirichletCharacter::power_of_root(cx5, A(5, "t^2+2"), 8).sign(), 0u);
  const ConstantExtension& cx3 = ConstantExtension::get(3, 2);
  const DirichletCharacter two(cx3, {{A(3, "t"), canonical_root(cx3, A(3, "t")), 1},
                                     {A(3, "t+1"), canonical_root(cx3, A(3, "t+1")), 1}});
  EXPECT_EQ(two.sign(), 0u);
  EXPECT_EQ(two.modulus(), A(3, "t^2+t"));
  EXPECT_TRUE(two.primitive());
}

TEST(Characters, MultiplicativeAndSignOnConstants) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const FiniteField& E = cx.ext();
  const auto all = polys_below_degree(cx.base(), 3);
  for (const char* m : {"t^2+1", "t^2+t"}) {
    for (const auto& chi : characters_mod(cx, A(3, m))) {
      for (const auto& a : all)
        for (const auto& b : all) EXPECT_EQ(chi.on_units(a * b), E.mul(chi.on_units(a), chi.on_units(b)));
      for (Fe c = 1; c < 3; ++c) {
        Fe want = 1;
        for (std::uint64_t i = 0; i < chi.sign(); ++i) want = E.mul(want, cx.embed(c));
        EXPECT_EQ(chi(PolyA::constant(cx.base(), c)), want) << chi.to_string();
      }
    }
  }
}

TEST(Characters, InverseAndProduct) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA m = A(3, "t^2+t");
  for (const auto& chi : characters_mod(cx, m)) {
    const DirichletCharacter one = chi * chi.inverse();
    for (const auto& a : polys_below_degree(cx.base(), 2)) {
      if (!gcd(a, m).is_one()) continue;
      EXPECT_EQ(one.on_units(a), 1u);
    }
    EXPECT_EQ(chi.inverse().inverse(), chi);
  }
}

TEST(Characters, ZeroExponentConvention) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA p = A(3, "t");
  const auto chi0 = DirichletCharacter::power_of_root(cx, p, 0);
  EXPECT_FALSE(chi0.primitive());
  EXPECT_EQ(chi0(p), 1u);
  EXPECT_EQ(chi0.on_units(p), 0u);
  EXPECT_EQ(chi0.on_units(A(3, "t+1")), 1u);
}

TEST(Characters, ChangingRootsKeepsValues) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = A(3, "t^2+1");
  const auto chi = DirichletCharacter::power_of_root(cx, p, 1);
  const Fe zeta = canonical_root(cx, p);
  const Fe other = cx.ext().frobenius(zeta);
  ASSERT_NE(zeta, other);
  const auto moved = chi.with_roots({other});
  EXPECT_EQ(moved.factors()[0].root, other);
  // chi_zeta = chi_{zeta^3}^e with 3e = 1 mod 8.
  EXPECT_EQ(moved.factors()[0].exponent, 3u);
  for (const auto& a : polys_below_degree(cx.base(), 3)) EXPECT_EQ(moved(a), chi(a));
}

TEST(Characters, ModulusEnumerationOrder) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const auto all = characters_mod(cx, A(3, "t^2+t"));
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0].factors()[0].exponent, 0u);
  EXPECT_EQ(all[0].factors()[1].exponent, 0u);
  EXPECT_EQ(all[1].factors()[1].exponent, 1u);
  EXPECT_EQ(all[3].factors()[0].exponent, 1u);
  EXPECT_EQ(characters_mod(cx, A(3, "t^2+t"), true).size(), 1u);
  EXPECT_EQ(characters_mod(cx, A(3, "t^2+1"), true).size(), 7u);
}

TEST(Characters, LiteralParsing) {
  const ConstantExtension& cx = ConstantExtension::get(5, 2);
  const auto lit = parse_character_literal(cx.base(), "chi{p=t^2+2; zeta=auto; e=5}");
  ASSERT_EQ(lit.primes.size(), 1u);
  EXPECT_EQ(lit.primes[0], A(5, "t^2+2"));
  EXPECT_FALSE(lit.roots[0].has_value());
  EXPECT_EQ(lit.exponents[0], 5u);
  EXPECT_EQ(character_from_literal(cx, lit), DirichletCharacter::power_of_root(cx, A(5, "t^2+2"), 5));
  EXPECT_THROW(parse_character_literal(cx.base(), "chi{p=t^2+2; e=5"), ParseError);
  EXPECT_THROW(parse_character_literal(cx.base(), "psi{p=t; e=1}"), ParseError);
  EXPECT_ANY_THROW(character_from_literal(cx, parse_character_literal(cx.base(), "chi{p=t^2; e=1}")));
}

TEST(Characters, ConvolutionMatchesJacobiFactor) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA m = A(3, "t^2+1");
  const auto chars = characters_mod(cx, m, true);
  for (const auto& a : chars)
    for (const auto& b : chars) {
      const JacobiFactor j = jacobi_factor(a, b);
      for (const auto& d : polys_below_degree(cx.base(), 2))
        EXPECT_EQ(convolve(a, b, d), cx.ext().mul(j.factor, j.product(d)));
    }
  const auto other = DirichletCharacter::power_of_root(cx, A(3, "t"), 1);
  EXPECT_THROW(convolve(chars[0], other, PolyA::one(cx.base())), ConductorMismatch);
}

TEST(GaussSums, SmallestExample) {
  // q = 3, p = t: g(chi) = 2 lambda and s(chi, 1) = 2 lambda.
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA p = A(3, "t");
  const TorsionContext& ctx = TorsionContext::get(cx, p);
  const auto chi = DirichletCharacter::power_of_root(cx, p, 1);
  EXPECT_EQ(gauss_thakur(chi, ctx), ctx.lambda().scaled(Fe{2}));
  EXPECT_EQ(char_sum_s(chi, 1, ctx), ctx.lambda().scaled(Fe{2}));
}

TEST(GaussSums, GaloisEquivariantAndNonzero) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  for (const char* m : {"t^2+1", "t^2+t"}) {
    const PolyA n = A(3, m);
    const TorsionContext& ctx = TorsionContext::get(cx, n);
    for (const auto& chi : characters_mod(cx, n, true)) {
      const RingElem g = gauss_thakur(chi, ctx);
      EXPECT_FALSE(g.is_zero());
      // g(chi) g(chi^{-1}) is fixed by the Galois action, so free of lambda.
      EXPECT_TRUE((g * gauss_thakur(chi.inverse(), ctx)).is_scalar()) << chi.to_string();
      for (const auto& b : ctx.residues()) {
        if (!gcd(b, n).is_one()) continue;
        EXPECT_EQ(ctx.galois(g, b), g.scaled(chi(b))) << chi.to_string() << " b=" << b.to_string();
      }
    }
  }
}

TEST(GaussSums, CharacterSumsVanishOffTheSign) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = A(3, "t^2+1");
  const TorsionContext& ctx = TorsionContext::get(cx, p);
  for (const auto& chi : characters_mod(cx, p, true))
    for (std::uint64_t k = 1; k <= 12; ++k) {
      const RingElem s = char_sum_s(chi, k, ctx);
      if (k % 2 != chi.sign()) EXPECT_TRUE(s.is_zero()) << chi.to_string() << " k=" << k;
    }
}

TEST(GaussSums, Preconditions) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = A(3, "t^2+1");
  const TorsionContext& ctx = TorsionContext::get(cx, p);
  EXPECT_THROW(gauss_thakur(DirichletCharacter::power_of_root(cx, p, 0), ctx), NotPrimitive);
  EXPECT_THROW(gauss_thakur(DirichletCharacter::power_of_root(cx, A(3, "t"), 1), ctx), ConductorMismatch);
}
