#include <gtest/gtest.h>

#include "drinfeld/errors.hpp"
#include "drinfeld/forms.hpp"
#include "drinfeld/series.hpp"

using namespace drinfeld;

namespace {

PolyA A(std::uint32_t p, const char* s) { return PolyA::parse(FiniteField::get(p, 1), s); }

const QuotientRing& scalars(const ConstantExtension& cx) { return QuotientRing::scalars(cx.ext()); }

UExpansion u_series(const ConstantExtension& cx, const QuotientRing& R, std::size_t N) {
  return UExpansion::monomial(cx, R, 1, N);
}

// u + t u^3 + u^4 + (t^2 + 1) u^7 over F(t).
UExpansion sample(const ConstantExtension& cx, std::size_t N) {
  const QuotientRing& R = scalars(cx);
  const Poly t = Poly::variable(cx.ext());
  UExpansion f(cx, R, N);
  const std::vector<std::pair<std::size_t, RingElem>> terms = {
      {1, R.one()}, {3, R.scalar(t)}, {4, R.one()}, {7, R.scalar(t * t + Poly::constant(cx.ext(), 1))}};
  for (const auto& [i, c] : terms)
    if (i < N) f.set(i, c);
  return f;
}

}  // namespace

TEST(Series, PrintsWithBigO) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const QuotientRing& R = scalars(cx);
  EXPECT_EQ(u_series(cx, R, 3).to_string(), "u + O(u^3)");
  EXPECT_EQ(UExpansion(cx, R, 4).to_string(), "0 + O(u^4)");
}

TEST(Series, PrecisionIsTheMinimum) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const UExpansion a = sample(cx, 10), b = sample(cx, 6);
  EXPECT_EQ((a + b).precision(), 6u);
  EXPECT_EQ((a * b).precision(), 6u);
  EXPECT_EQ((a - a.truncated(8)).precision(), 8u);
  EXPECT_TRUE((a - a.truncated(8)).is_zero());
}

TEST(Series, InverseAndPower) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const QuotientRing& R = scalars(cx);
  const UExpansion one = UExpansion::monomial(cx, R, 0, 20);
  const UExpansion f = one + sample(cx, 20);
  EXPECT_EQ(f * series_inverse(f), one);
  UExpansion p = one;
  for (int i = 0; i < 5; ++i) p = p * f;
  EXPECT_EQ(series_power(f, 5), p);
  EXPECT_THROW(series_inverse(sample(cx, 20)), NotInvertible);
}

TEST(Series, UOfTheta) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const QuotientRing& R = scalars(cx);
  const std::size_t N = 30;
  EXPECT_EQ(u_of_az(cx, PolyA::one(cx.base()), N), u_series(cx, R, N));
  // u(tz) = u^3 / (1 + t u^2).
  UExpansion den = UExpansion::monomial(cx, R, 0, N) +
                   UExpansion::monomial(cx, R, 2, N).scaled(RatFunc(Poly::variable(cx.ext())));
  const UExpansion want = UExpansion::monomial(cx, R, 3, N) * series_inverse(den);
  EXPECT_EQ(u_of_az(cx, PolyA::theta(cx.base()), N), want);
}

TEST(Series, UOfProductIsComposition) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const std::size_t N = 60;
  for (const char* a : {"t", "t+1", "2*t"})
    for (const char* b : {"t", "t+2", "t^2+1"}) {
      const UExpansion c = compose(u_of_az(cx, A(3, a), N), u_of_az(cx, A(3, b), N));
      EXPECT_EQ(c, u_of_az(cx, A(3, a) * A(3, b), N).truncated(c.precision())) << a << " * " << b;
    }
}

TEST(Series, CompositionIsAssociative) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const UExpansion f = sample(cx, 30);
  const UExpansion x = u_of_az(cx, A(3, "t+1"), 30);
  const UExpansion y = sample(cx, 30) + u_of_az(cx, A(3, "t"), 30);
  const UExpansion l = compose(compose(f, x), y), r = compose(f, compose(x, y));
  const std::size_t n = std::min(l.precision(), r.precision());
  EXPECT_EQ(l.truncated(n), r.truncated(n));
  EXPECT_GE(n, 20u);
}

TEST(Series, ShiftMatchesMobius) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const TorsionContext& ctx = TorsionContext::get(cx, A(3, "t^2+1"));
  const QuotientRing& R = ctx.ring();
  const std::size_t N = 25;
  const UExpansion u = u_series(cx, R, N);
  const UExpansion f = embed(sample(cx, N), R);
  const GossPolynomial& G = goss_poly(cx, 4);
  for (std::size_t b = 0; b < ctx.residues().size(); ++b) {
    const RingElem& l = ctx.exp_value(b);
    EXPECT_EQ(shift_by_value(u, l), mobius(u, l));
    EXPECT_EQ(shift_by_value(f, l), compose(f, mobius(u, l)));
    EXPECT_EQ(shift_by_value(goss_series(G, cx, R, N), l), compose(G, mobius(u, l)));
    EXPECT_EQ(shift_by_torsion(f, ctx.residues()[b], ctx), shift_by_value(f, l));
  }
}

TEST(Series, WeightedShiftSumIsTheSumOfShifts) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const TorsionContext& ctx = TorsionContext::get(cx, A(3, "t^2+t"));
  const QuotientRing& R = ctx.ring();
  const std::size_t N = 25;
  const UExpansion f = embed(sample(cx, N), R) + goss_series(goss_poly(cx, 5), cx, R, N);
  std::vector<RingElem> w;
  const Poly t = Poly::variable(cx.ext());
  for (std::size_t b = 0; b < ctx.residues().size(); ++b)
    w.push_back(R.scalar(t.pow(b) + Poly::constant(cx.ext(), static_cast<Fe>(b % 3))));
  UExpansion want(cx, R, N);
  for (std::size_t b = 0; b < w.size(); ++b) want += shift_by_torsion(f, ctx.residues()[b], ctx).scaled(w[b]);
  EXPECT_EQ(weighted_shift_sum(f, w, ctx), want);
}

TEST(Series, SubparameterRoundTrip) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  for (const char* q : {"t", "t+2", "t^2+1"}) {
    const PolyA Q = A(3, q);
    const UExpansion f = sample(cx, 20);
    const std::size_t Nv = 20 * Q.abs();
    const UExpansion g = to_subparameter(f, Q, Nv);
    EXPECT_EQ(g.precision(), Nv);
    EXPECT_EQ(descend(g, Q), f);
    // Rescaling undoes the substitution: f(q (z/q)).
    EXPECT_EQ(rescale_arg(descend(g, Q), Q), rescale_arg(f, Q));
  }
}

TEST(Series, DescendRejectsWhatItCannotDo) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const QuotientRing& R = scalars(cx);
  const PolyA q = A(3, "t");
  try {
    descend(u_series(cx, R, 30), q);
    FAIL();
  } catch (const NotDescendable& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  EXPECT_THROW(descend(u_series(cx, R, 2), q), PrecisionTooSmall);
  EXPECT_THROW(to_subparameter(sample(cx, 5), q, 16), PrecisionTooSmall);
}

TEST(Series, AExpansionDegreeBounds) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const AExpansion F = petrov_fs(cx, 1, 0);
  EXPECT_EQ(F.required_degree_bound(3), 0);
  EXPECT_EQ(F.required_degree_bound(4), 1);
  EXPECT_EQ(F.required_degree_bound(28), 3);
  EXPECT_THROW(render_a_expansion(F, 30), InsufficientDegreeBound);
  EXPECT_THROW(F.coefficient(A(3, "t")), InsufficientDegreeBound);
  EXPECT_NO_THROW(render_a_expansion(F, 3));
}

TEST(Series, GossKindOfIndexOneIsPowerKind) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const auto chi = DirichletCharacter::power_of_root(cx, A(3, "t"), 1);
  AExpansion F = fricke_eisenstein(chi, 1, 3);
  ASSERT_EQ(F.kind, AExpansion::Kind::Goss);
  AExpansion P = F;
  P.kind = AExpansion::Kind::Power;
  EXPECT_EQ(render_a_expansion(F, 40), render_a_expansion(P, 40));
}

// Twisted Eisenstein series against the literal double sum
// sum_{c != 0} sum_a w_a G_k(u(cz + a/p)) plus the c = 0 term.
TEST(Series, TwistedEisensteinMatchesLiteralSum) {
  struct Case {
    std::uint32_t q;
    const char* p;
    std::uint64_t e;
    int k;
  };
  for (const Case& c : {Case{3, "t", 1, 1}, Case{3, "t^2+1", 1, 1}, Case{3, "t^2+1", 2, 2}, Case{3, "t+1", 0, 2}}) {
    const PolyA p = A(c.q, c.p);
    const ConstantExtension& cx = ConstantExtension::get(c.q, splitting_degree({p}));
    const TorsionContext& ctx = TorsionContext::get(cx, p);
    const QuotientRing& R = ctx.ring();
    const auto chi = DirichletCharacter::power_of_root(cx, p, c.e);
    const TwistedEisenstein T = make_twisted_eisenstein(chi, c.k, ctx);
    const std::size_t N = 10;
    const GossPolynomial& G = goss_poly(cx, c.k);
    UExpansion want(cx, R, N);
    RingElem constant = R.zero();
    for (std::size_t a = 0; a < ctx.residues().size(); ++a) {
      if (T.weights[a].is_zero()) continue;
      const RingElem& l = ctx.exp_value(a);
      constant += evaluate(G, ring_invert(l)).scaled(T.weights[a]);
      for (const auto& cc : polys_below_degree(cx.base(), 3)) {
        if (cc.is_zero()) continue;
        want += compose(G, mobius(embed(u_of_az(cx, cc, N), R), l)).scaled(T.weights[a]);
      }
    }
    UExpansion k0(cx, R, N);
    k0.set(0, constant);
    want += k0;
    EXPECT_EQ(twisted_constant_term(T), constant);
    EXPECT_EQ(render_twisted_eisenstein(T, N), want) << c.p << " e=" << c.e << " k=" << c.k;
  }
}

TEST(Series, TwistedEisensteinSignObstruction) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = A(3, "t^2+1");
  const TorsionContext& ctx = TorsionContext::get(cx, p);
  EXPECT_THROW(make_twisted_eisenstein(DirichletCharacter::power_of_root(cx, p, 2), 1, ctx), SignMismatch);
  EXPECT_NO_THROW(make_twisted_eisenstein(DirichletCharacter::power_of_root(cx, p, 3), 1, ctx));
}
