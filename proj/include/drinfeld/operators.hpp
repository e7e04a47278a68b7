#pragma once

#include <cstddef>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/characters.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

// n-torsion context whose ring also carries every generator of `ring`.
const TorsionContext& joint_context(const ConstantExtension& cx, const PolyA& modulus, const QuotientRing& ring);

// n^{2m-k} sum_beta chi^{-1}(beta) f(z + beta/n). Needs weight/type metadata;
// the output has type m + s_chi, level lcm(level, n^2), nebentypus psi chi^2.
UExpansion twist_raw(const UExpansion& f, const DirichletCharacter& chi);
UExpansion twist_raw(const UExpansion& f, const DirichletCharacter& chi, const TorsionContext& ctx);
// n^{k-2m-1} g(chi^{-1}) twist_raw(f); chi must be primitive.
UExpansion twist_normalized(const UExpansion& f, const DirichletCharacter& chi);
UExpansion twist_normalized(const UExpansion& f, const DirichletCharacter& chi, const TorsionContext& ctx);
// Closed form of twist_normalized(u^i) to precision N.
UExpansion twist_monomial_closed(std::size_t i, const DirichletCharacter& chi, const TorsionContext& ctx,
                                 std::size_t N);

// psi(q) q^k f(qz) + sum_beta f((z+beta)/q), to precision floor(N/|q|).
// Needs weight and nebentypus metadata.
UExpansion hecke_u(const UExpansion& f, const PolyA& q);
UExpansion hecke_u(const UExpansion& f, const PolyA& q, const TorsionContext& ctx_q);

// Exact Hecke action on coefficients; the degree bound drops by deg q.
AExpansion hecke_a(const AExpansion& F, const PolyA& q);
// Component a moves to q a mod p, scaled by q^k. LevelPrime when p | q.
TwistedEisenstein hecke_twisted(const TwistedEisenstein& T, const PolyA& q);

// sum_delta f(z + delta/n) for a power-kind expansion with i <= q:
// coefficient n^i c_a at a n when gcd(a, n) = 1.
AExpansion delta_sum(const AExpansion& F, const PolyA& n);

}  // namespace drinfeld
