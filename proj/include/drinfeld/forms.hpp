#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "drinfeld/operators.hpp"
#include "drinfeld/report.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

struct FormSpec;

namespace spec {
struct PetrovFs { int s; };            // sum a^{1+s(q-1)} u(az)
struct Delta {};                      // sum a^{q(q-1)} u(az)^{q-1}
struct FalseEisenstein {};            // sum a u(az)
struct EisensteinEp { PolyA p; };     // E(z) - p E(pz)
struct FrickeEis { DirichletCharacter chi; int k; };   // sum chi^{-1}(c) G_k(u(cz))
struct TwistedEis { DirichletCharacter chi; int k; };  // weights chi^{-1} over units mod p
struct RawTwistOf { std::shared_ptr<const FormSpec> form; DirichletCharacter chi; };
struct NormalizedTwistOf { std::shared_ptr<const FormSpec> form; DirichletCharacter chi; };
}  // namespace spec

struct FormSpec {
  std::variant<spec::PetrovFs, spec::Delta, spec::FalseEisenstein, spec::EisensteinEp, spec::FrickeEis,
               spec::TwistedEis, spec::RawTwistOf, spec::NormalizedTwistOf>
      v;

  std::string name(std::string_view var = "t") const;
};

FormSpec raw_twist_of(const FormSpec& f, const DirichletCharacter& chi);
FormSpec normalized_twist_of(const FormSpec& f, const DirichletCharacter& chi);

// Weight, type, level and nebentypus of the form.
ModularMeta form_meta(const ConstantExtension& cx, const FormSpec& f);

// Low-level builders. fricke_eisenstein and twisted_eisenstein accept any
// character of prime modulus, including the one with exponent 0.
AExpansion petrov_fs(const ConstantExtension& cx, int s, int degree_bound);
AExpansion delta_form(const ConstantExtension& cx, int degree_bound);
AExpansion false_eisenstein(const ConstantExtension& cx, int degree_bound);
AExpansion eisenstein_ep(const ConstantExtension& cx, const PolyA& p, int degree_bound);
AExpansion fricke_eisenstein(const DirichletCharacter& chi, int k, int degree_bound);
TwistedEisenstein twisted_eisenstein(const DirichletCharacter& chi, int k);

// A-expansion of an A-expansion kind (everything but TwistedEis and twists).
AExpansion build_a(const ConstantExtension& cx, const FormSpec& f, int degree_bound);
TwistedEisenstein build_twisted(const FormSpec& f);
bool has_a_expansion(const FormSpec& f);
// u-expansion to precision N, with degree bounds chosen automatically.
UExpansion render(const ConstantExtension& cx, const FormSpec& f, std::size_t N);

// Predicted Hecke eigenvalue at q.
RatFunc expected_eigenvalue(const ConstantExtension& cx, const FormSpec& f, const PolyA& q);

// One report per q. A-expansions use hecke_a at the given degree bound,
// twisted Eisenstein series use hecke_twisted, twists use hecke_u on
// renderings at precision N |q| compared at precision N.
std::vector<VerificationReport> verify_eigensystem(const ConstantExtension& cx, const FormSpec& f,
                                                   const std::vector<PolyA>& qs, int degree_bound, std::size_t N);

// sum over units a of chi^{-1}(a) G_k(1/lambda_a). SignMismatch unless
// s_chi = -k mod (q - 1).
RingElem eis_constant_term(const DirichletCharacter& chi, int k, const TorsionContext& ctx);
// Nonzero and scaled by chi(b) under lambda -> C_b(lambda) for every unit b.
VerificationReport verify_eis_constant_term(const DirichletCharacter& chi, int k, const TorsionContext& ctx);

enum class CongruenceKind { SF, TwistedSF };
// chi_{p,s} = chi_zeta^{|p|-2-s(q-1)}; requires |p| > 2 + s(q-1).
DirichletCharacter congruence_character(const ConstantExtension& cx, const PolyA& p, int s);
VerificationReport congruence_check(const ConstantExtension& cx, CongruenceKind kind, const PolyA& p, int s,
                                    std::size_t N);

// twist_normalized(Ehat) against (g(chi^{-1})/p)(Etilde(pz) - Etilde(z)).
VerificationReport ehat_twist_identity(const DirichletCharacter& chi, int k, std::size_t N);

// Rank of {Etilde_chi, Ehat_chi : s_chi = -k} truncated at N.
std::size_t eisenstein_rank(const ConstantExtension& cx, const PolyA& p, int k, std::size_t N);

// Coefficients of 1 - lambda x.
std::vector<RatFunc> local_l_factor(const RatFunc& lambda);

// First index where two series differ, as a witness string.
std::optional<std::string> first_difference(const UExpansion& a, const UExpansion& b);

}  // namespace drinfeld
