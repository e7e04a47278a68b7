#include <gtest/gtest.h>

#include <set>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/goss.hpp"
#include "drinfeld/series.hpp"

using namespace drinfeld;

namespace {

PolyA A(std::uint32_t p, const char* s) { return PolyA::parse(FiniteField::get(p, 1), s); }

CarlitzCoeffs padded(CarlitzCoeffs c, std::size_t n, const FiniteField& F) {
  while (c.size() < n) c.push_back(PolyA::constant(F, 0));
  return c;
}

}  // namespace

TEST(Carlitz, SmallCoefficients) {
  const FiniteField& F = FiniteField::get(3, 1);
  const PolyA t = PolyA::theta(F);
  EXPECT_EQ(carlitz_coeffs(PolyA::one(F)), CarlitzCoeffs{PolyA::one(F)});
  EXPECT_EQ(carlitz_coeffs(t), (CarlitzCoeffs{t, PolyA::one(F)}));
  EXPECT_EQ(carlitz_coeffs(t * t), (CarlitzCoeffs{t * t, t.pow(3) + t, PolyA::one(F)}));
}

TEST(Carlitz, CompositionAndAdditivityUpToDegreeTwo) {
  const FiniteField& F = FiniteField::get(3, 1);
  const auto all = polys_below_degree(F, 3);
  for (const auto& a : all) {
    if (a.is_zero()) continue;
    const auto ca = carlitz_coeffs(a);
    EXPECT_EQ(ca.front(), a);
    EXPECT_EQ(ca.back(), PolyA::constant(F, a.lead()));
    for (const auto& b : all) {
      if (b.is_zero()) continue;
      EXPECT_EQ(compose_additive(ca, carlitz_coeffs(b)), carlitz_coeffs(a * b));
      if ((a + b).is_zero()) continue;
      const auto cs = carlitz_coeffs(a + b);
      const std::size_t n = std::max({ca.size(), carlitz_coeffs(b).size(), cs.size()});
      const auto pa = padded(ca, n, F), pb = padded(carlitz_coeffs(b), n, F), ps = padded(cs, n, F);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(ps[i], pa[i] + pb[i]);
    }
  }
}

TEST(Torsion, ThetaTorsionRelation) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA t = A(3, "t");
  const TorsionContext& ctx = TorsionContext::get(cx, t);
  const RingElem& l = ctx.exp_value(PolyA::one(cx.base()));
  EXPECT_EQ(l, ctx.lambda());
  EXPECT_EQ(l.pow(2), -ctx.ring().scalar(t.lift(cx)));
  EXPECT_TRUE(ctx.exp_value(PolyA::constant(cx.base(), 0)).is_zero());
  EXPECT_EQ(&ctx, &TorsionContext::get(cx, t));
}

TEST(Torsion, QuinticDimension) {
  const ConstantExtension& cx = ConstantExtension::get(5, 2);
  const TorsionContext& ctx = TorsionContext::get(cx, A(5, "t^2+2"));
  EXPECT_EQ(ctx.ring().dim(), 24u);
  EXPECT_EQ(cx.ext().size(), 25u);
}

TEST(Torsion, EisensteinShapeOfRelations) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  for (const char* p : {"t", "t+1", "t^2+1"}) {
    const PolyA P = A(3, p);
    const Relation rel = carlitz_relation(cx, P);
    const Poly lifted = P.lift(cx);
    EXPECT_EQ(rel.coeffs.front(), lifted);
    for (std::size_t i = 0; i + 1 < rel.coeffs.size(); ++i) EXPECT_TRUE(lifted.divides(rel.coeffs[i]));
    EXPECT_TRUE(rel.coeffs.back().is_one());
  }
  EXPECT_THROW(carlitz_relation(cx, A(3, "t^2+t")), InvalidArgument);
}

TEST(Torsion, AdditiveInjectiveAndKilledByModulus) {
  for (const char* m : {"t^2+1", "t^2+t", "t^3+t"}) {
    const PolyA n = A(3, m);
    const ConstantExtension& cx = ConstantExtension::get(3, splitting_degree(squarefree_factors(n)));
    const TorsionContext& ctx = TorsionContext::get(cx, n);
    const auto& res = ctx.residues();
    for (std::size_t i = 0; i < res.size(); ++i)
      for (std::size_t j = 0; j < res.size(); ++j)
        EXPECT_EQ(ctx.exp_value(i) + ctx.exp_value(j), ctx.exp_value(res[i] + res[j])) << m;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < res.size(); ++i) seen.insert(ctx.exp_value(i).to_string());
    EXPECT_EQ(seen.size(), res.size());
    EXPECT_TRUE(carlitz_action(n, ctx.lambda(), cx).is_zero());
    for (std::size_t i = 0; i < ctx.primes().size(); ++i) EXPECT_FALSE(ctx.prime_lambda(i).is_zero());
  }
  EXPECT_THROW(TorsionContext::get(ConstantExtension::get(3, 1), A(3, "t^2")), NotSquareFree);
}

TEST(Torsion, GaloisActionMovesTorsionValues) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const TorsionContext& ctx = TorsionContext::get(cx, A(3, "t^2+1"));
  for (const auto& b : ctx.residues()) {
    if (b.is_zero()) continue;
    EXPECT_EQ(ctx.galois(ctx.lambda(), b), ctx.exp_value(b));
    for (const auto& a : ctx.residues()) EXPECT_EQ(ctx.galois(ctx.exp_value(a), b), ctx.exp_value((a * b) % ctx.modulus()));
  }
}

TEST(Goss, FirstPolynomials) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const ConstantExtension& cx = ConstantExtension::get(q, 1);
    const FiniteField& E = cx.ext();
    const Poly X = Poly::variable(E);
    EXPECT_EQ(goss_poly(cx, 1).to_string(), "X");
    const GossPolynomial& Gq = goss_poly(cx, static_cast<int>(q));
    EXPECT_EQ(Gq.degree(), static_cast<int>(q));
    EXPECT_TRUE(Gq.coeffs.back().is_one());
    for (int j = 0; j < static_cast<int>(q); ++j) EXPECT_TRUE(Gq.coeffs[j].is_zero());
    // G_{q+1} = X^{q+1} + X^2 / (t^q - t).
    const GossPolynomial& G = goss_poly(cx, static_cast<int>(q) + 1);
    GossPolynomial want;
    want.coeffs.assign(q + 2, RatFunc(E));
    want.coeffs[q + 1] = RatFunc::constant(E, 1);
    want.coeffs[2] += RatFunc(Poly::constant(E, 1), Poly::monomial(E, 1, q) - X);
    EXPECT_EQ(G, want) << G.to_string();
  }
}

TEST(Goss, ConstructionsAgreeAndSupportIsCongruent) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const ConstantExtension& cx = ConstantExtension::get(q, 1);
    for (int k = 1; k <= static_cast<int>(4 * q); ++k) {
      const GossPolynomial a = goss_poly_recursive(cx, k);
      EXPECT_EQ(a, goss_poly_generating(cx, k)) << "q=" << q << " k=" << k;
      EXPECT_TRUE(a.coeffs[0].is_zero());
      for (std::size_t j = 0; j < a.coeffs.size(); ++j)
        if (!a.coeffs[j].is_zero() && q > 2) EXPECT_EQ(j % (q - 1), static_cast<std::size_t>(k) % (q - 1));
    }
  }
  EXPECT_THROW(goss_poly(ConstantExtension::get(3, 1), 0), InvalidArgument);
}

TEST(Goss, TorsionLatticeRange) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA n = A(3, "t");
  EXPECT_EQ(goss_poly_torsion(cx, n, 1).to_string(), "X");
  EXPECT_EQ(goss_poly_torsion(cx, n, 3).to_string(), "X^3");
  EXPECT_THROW(goss_poly_torsion(cx, n, 4), Unsupported);
}

// sum over delta mod n of G_k(u(z + delta/n)) = n^k G_k(u(nz)): the lattice
// sum identity behind the Goss polynomials, checked through literal series
// arithmetic.
TEST(Goss, DistributionOverTorsionShifts) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  for (const char* m : {"t", "t+1", "t^2+t"}) {
    const PolyA n = A(3, m);
    const TorsionContext& ctx = TorsionContext::get(cx, n);
    const QuotientRing& R = ctx.ring();
    const std::size_t N = 30;
    const UExpansion u = UExpansion::monomial(cx, R, 1, N);
    for (int k = 1; k <= 8; ++k) {
      const GossPolynomial& G = goss_poly(cx, k);
      UExpansion lhs(cx, R, N);
      for (std::size_t b = 0; b < ctx.residues().size(); ++b) lhs += compose(G, mobius(u, ctx.exp_value(b)));
      const UExpansion rhs = compose(G, embed(u_of_az(cx, n, N), R)).scaled(RatFunc(n.lift(cx)).pow(k));
      EXPECT_EQ(lhs, rhs) << "n=" << m << " k=" << k;
    }
  }
}
