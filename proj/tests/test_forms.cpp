#include <gtest/gtest.h>

#include "json.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/forms.hpp"
#include "drinfeld/suites.hpp"

using namespace drinfeld;

namespace {

PolyA A(std::uint32_t p, const char* s) { return PolyA::parse(FiniteField::get(p, 1), s); }

RatFunc embedded(const ConstantExtension& cx, Fe c) { return RatFunc::constant(cx.ext(), c); }

}  // namespace

TEST(Forms, Metadata) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = A(3, "t^2+1");
  const auto chi = DirichletCharacter::power_of_root(cx, p, 1);
  const ModularMeta f2 = form_meta(cx, FormSpec{spec::PetrovFs{2}});
  EXPECT_EQ(f2.weight, 6);
  EXPECT_EQ(f2.type, 1);
  const ModularMeta d = form_meta(cx, FormSpec{spec::Delta{}});
  EXPECT_EQ(d.weight, 8);
  EXPECT_EQ(d.type, 0);
  const ModularMeta ep = form_meta(cx, FormSpec{spec::EisensteinEp{p}});
  EXPECT_EQ(ep.weight, 2);
  EXPECT_EQ(ep.level, p);
  const ModularMeta fr = form_meta(cx, FormSpec{spec::FrickeEis{chi, 1}});
  EXPECT_EQ(fr.level, p);
  ASSERT_TRUE(fr.nebentypus.has_value());
  EXPECT_EQ(*fr.nebentypus, chi.inverse());
  EXPECT_THROW(form_meta(cx, FormSpec{spec::PetrovFs{0}}), InvalidArgument);
  EXPECT_THROW(petrov_fs(cx, 0, 2), InvalidArgument);
}

TEST(Forms, LeadingTerms) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const UExpansion f1 = render(cx, FormSpec{spec::PetrovFs{1}}, 20);
  EXPECT_EQ(*f1.valuation(), 1u);
  EXPECT_TRUE(f1[1].is_one());
  const UExpansion d = render(cx, FormSpec{spec::Delta{}}, 20);
  EXPECT_EQ(*d.valuation(), 2u);
  EXPECT_TRUE(d[2].is_one());
  const UExpansion e = render(cx, FormSpec{spec::FalseEisenstein{}}, 20);
  EXPECT_TRUE(e[1].is_one());
}

TEST(Forms, EisensteinAtLevelDropsMultiplesOfP) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA p = A(3, "t");
  const AExpansion F = eisenstein_ep(cx, p, 2);
  const AExpansion E = false_eisenstein(cx, 2);
  EXPECT_TRUE(F.coefficient(p).is_zero());
  EXPECT_TRUE(F.coefficient(p * A(3, "t+1")).is_zero());
  EXPECT_EQ(F.coefficient(PolyA::one(cx.base())), E.coefficient(PolyA::one(cx.base())));
  EXPECT_EQ(F.coefficient(A(3, "t+2")), E.coefficient(A(3, "t+2")));
  EXPECT_THROW(eisenstein_ep(cx, A(3, "t^2"), 2), InvalidArgument);
}

TEST(Forms, FrickeEisensteinCoefficients) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = A(3, "t^2+1");
  for (std::uint64_t e : {1u, 3u, 5u}) {
    const auto chi = DirichletCharacter::power_of_root(cx, p, e);
    const AExpansion F = fricke_eisenstein(chi, 1, 2);
    for (const auto& c : monics_up_to_degree(cx.base(), 2))
      EXPECT_EQ(F.coefficient(c), embedded(cx, chi.inverse().on_units(c))) << c.to_string();
  }
}

TEST(Forms, TwistedEisensteinSignObstruction) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = A(3, "t^2+1");
  for (const auto& chi : characters_mod(cx, p, true))
    for (int k = 1; k <= 4; ++k) {
      const bool ok = (chi.sign() + static_cast<std::uint64_t>(k)) % 2 == 0;
      if (ok) EXPECT_NO_THROW(twisted_eisenstein(chi, k));
      else EXPECT_THROW(twisted_eisenstein(chi, k), SignMismatch);
    }
  const auto two = DirichletCharacter(cx, {{A(3, "t"), canonical_root(cx, A(3, "t")), 1},
                                           {A(3, "t+1"), canonical_root(cx, A(3, "t+1")), 1}});
  EXPECT_THROW(twisted_eisenstein(two, 2), InvalidArgument);
}

TEST(Forms, ConstantTermAtTheta) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const PolyA p = A(3, "t");
  const TorsionContext& ctx = TorsionContext::get(cx, p);
  const auto chi = DirichletCharacter::power_of_root(cx, p, 1);
  // 1/lambda + 2/(2 lambda) = -1/lambda = lambda/t.
  const RingElem c = eis_constant_term(chi, 1, ctx);
  EXPECT_EQ(c, ctx.lambda().scaled(RatFunc(Poly::constant(cx.ext(), 1), Poly::variable(cx.ext()))));
  EXPECT_THROW(eis_constant_term(chi, 2, ctx), SignMismatch);
  EXPECT_TRUE(verify_eis_constant_term(chi, 1, ctx).pass);
}

TEST(Forms, CatalogTwistsAgreeWithOperators) {
  const ConstantExtension& cx = ConstantExtension::get(3, 2);
  const PolyA p = A(3, "t^2+1");
  const auto chi = DirichletCharacter::power_of_root(cx, p, 1);
  const std::size_t N = 20;
  for (const FormSpec& f : {FormSpec{spec::PetrovFs{1}}, FormSpec{spec::Delta{}}}) {
    const UExpansion base = render(cx, f, N);
    EXPECT_EQ(render(cx, raw_twist_of(f, chi), N), twist_raw(base, chi)) << f.name();
    EXPECT_EQ(render(cx, normalized_twist_of(f, chi), N), twist_normalized(base, chi)) << f.name();
    EXPECT_FALSE(render(cx, normalized_twist_of(f, chi), N).is_zero());
  }
}

TEST(Forms, EigensystemReports) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  const std::vector<PolyA> qs = {A(3, "t"), A(3, "t+1"), A(3, "t^2+1")};
  for (const FormSpec& f : {FormSpec{spec::PetrovFs{1}}, FormSpec{spec::Delta{}}}) {
    const auto reports = verify_eigensystem(cx, f, qs, 3, 9);
    ASSERT_EQ(reports.size(), qs.size());
    for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.to_text();
  }
}

TEST(Forms, CongruencePrecondition) {
  const ConstantExtension& cx = ConstantExtension::get(3, 1);
  EXPECT_THROW(congruence_character(cx, A(3, "t"), 1), InvalidArgument);
  EXPECT_THROW(congruence_character(cx, A(3, "t"), 0), InvalidArgument);
  const ConstantExtension& cx2 = ConstantExtension::get(3, 2);
  const auto chi = congruence_character(cx2, A(3, "t^2+1"), 1);
  EXPECT_EQ(chi.factors()[0].exponent, 5u);
}

TEST(Forms, LocalFactor) {
  const FiniteField& E = FiniteField::get(3, 1);
  const RatFunc lam(Poly::variable(E) + Poly::constant(E, 1));
  const auto f = local_l_factor(lam);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_TRUE(f[0].is_one());
  EXPECT_EQ(f[1], -lam);
}

TEST(Reports, JsonShapeAndDeterminism) {
  VerificationReport r{"hecke-eigen", {{"form", "f_1"}, {"q", "t"}}, 30, false, std::string("u^4")};
  const auto j = nlohmann::ordered_json::parse(r.to_json());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"identity", "params", "precision", "pass", "witness"}));
  EXPECT_EQ(j["params"]["q"], "t");
  EXPECT_EQ(j["precision"], 30);
  EXPECT_EQ(j["pass"], false);
  r.pass = true;
  r.witness.reset();
  EXPECT_TRUE(nlohmann::json::parse(r.to_json())["witness"].is_null());
  EXPECT_EQ(r.to_csv(), "hecke-eigen,form=f_1;q=t,30,true,");
  EXPECT_EQ(csv_header(), "identity,params,precision,pass,witness");

  SuiteOptions o;
  const auto a = run_suite("convolution", o), b = run_suite("convolution", o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json(), b[i].to_json());
  EXPECT_THROW(run_suite("nonsense", o), InvalidArgument);
}
