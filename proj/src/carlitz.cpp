#include "drinfeld/carlitz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

// b(theta)^q for b in F_q[theta]: coefficients are fixed by Frobenius.
PolyA frobenius_q(const PolyA& b) {
  const std::uint64_t q = b.field().size();
  std::vector<Fe> c(b.degree() < 0 ? 0 : static_cast<std::size_t>(b.degree()) * q + 1, 0);
  for (int i = 0; i <= b.degree(); ++i) c[static_cast<std::size_t>(i) * q] = b[i];
  return PolyA(b.field(), std::move(c));
}

PolyA frobenius_q_pow(PolyA b, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) b = frobenius_q(b);
  return b;
}

std::string carlitz_tag(const PolyA& prime) { return "C[" + prime.to_string() + "]"; }

}  // namespace

CarlitzCoeffs carlitz_coeffs(const PolyA& a) {
  const FiniteField& F = a.field();
  if (a.is_zero()) return {};
  const PolyA theta = PolyA::theta(F);
  CarlitzCoeffs power{PolyA::one(F)};  // C_{theta^j}
  CarlitzCoeffs out(static_cast<std::size_t>(a.degree()) + 1, PolyA(Poly(F)));
  for (int j = 0; j <= a.degree(); ++j) {
    if (j > 0) {
      CarlitzCoeffs next(power.size() + 1, PolyA(Poly(F)));
      for (std::size_t i = 0; i < power.size(); ++i) {
        next[i] = next[i] + theta * power[i];
        next[i + 1] = next[i + 1] + frobenius_q(power[i]);
      }
      power = std::move(next);
    }
    if (a[j] == 0) continue;
    for (std::size_t i = 0; i < power.size(); ++i) out[i] = out[i] + power[i].scaled(a[j]);
  }
  return out;
}

CarlitzCoeffs compose_additive(const CarlitzCoeffs& f, const CarlitzCoeffs& g) {
  if (f.empty() || g.empty()) return {};
  const FiniteField& F = f[0].field();
  CarlitzCoeffs out(f.size() + g.size() - 1, PolyA(Poly(F)));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = out[i + j] + f[i] * frobenius_q_pow(g[j], i);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

RingElem carlitz_action(const PolyA& a, const RingElem& x, const ConstantExtension& cx) {
  const auto coeffs = carlitz_coeffs(a);
  RingElem acc = x.ring().zero();
  RingElem xp = x;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) xp = xp.pow(cx.q());
    if (!coeffs[i].is_zero()) acc += xp.scaled(coeffs[i].lift(cx));
  }
  return acc;
}

Relation carlitz_relation(const ConstantExtension& cx, const PolyA& prime) {
  if (!prime.is_monic() || !is_irreducible(prime))
    throw InvalidArgument(prime.to_string() + " is not a monic irreducible");
  const auto coeffs = carlitz_coeffs(prime);
  std::uint64_t qi = 1;
  Relation rel;
  rel.tag = carlitz_tag(prime);
  rel.prime = prime;
  rel.coeffs.assign(prime.abs(), Poly(cx.ext()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    rel.coeffs[qi - 1] = coeffs[i].lift(cx);
    qi *= cx.q();
  }
  return rel;
}

const QuotientRing& carlitz_ring(const ConstantExtension& cx, std::vector<PolyA> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Relation> rels;
  for (const auto& p : primes) rels.push_back(carlitz_relation(cx, p));
  return QuotientRing::get(cx.ext(), std::move(rels));
}

std::vector<PolyA> carlitz_primes(const QuotientRing& ring) {
  std::vector<PolyA> out;
  for (std::size_t g = 0; g < ring.generator_count(); ++g) {
    if (!ring.relation(g).prime) throw InvalidArgument("ring generator " + ring.relation(g).tag + " is not Carlitz torsion");
    out.push_back(*ring.relation(g).prime);
  }
  return out;
}

const TorsionContext& TorsionContext::get(const ConstantExtension& cx, const PolyA& modulus) {
  return get(cx, modulus, {});
}

const TorsionContext& TorsionContext::get(const ConstantExtension& cx, const PolyA& modulus,
                                          const std::vector<PolyA>& extra_primes) {
  if (!modulus.is_monic() || modulus.degree() < 1)
    throw InvalidArgument("torsion modulus must be monic and nonconstant, got " + modulus.to_string());
  std::vector<PolyA> ring_primes = squarefree_factors(modulus);
  ring_primes.insert(ring_primes.end(), extra_primes.begin(), extra_primes.end());
  std::sort(ring_primes.begin(), ring_primes.end());
  ring_primes.erase(std::unique(ring_primes.begin(), ring_primes.end()), ring_primes.end());

  std::vector<std::string> key;
  for (const auto& p : ring_primes) key.push_back(p.to_string());
  static std::mutex mu;
  static std::map<std::tuple<const ConstantExtension*, std::string, std::vector<std::string>>,
                  std::unique_ptr<TorsionContext>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{&cx, modulus.to_string(), key}];
  if (!slot) slot.reset(new TorsionContext(cx, modulus, std::move(ring_primes)));
  return *slot;
}

TorsionContext::TorsionContext(const ConstantExtension& cx, const PolyA& modulus, std::vector<PolyA> ring_primes)
    : cx_(&cx), modulus_(modulus), primes_(squarefree_factors(modulus)) {
  ring_ = &carlitz_ring(cx, ring_primes);
  const auto all = carlitz_primes(*ring_);
  for (const auto& p : primes_) {
    const auto it = std::find(all.begin(), all.end(), p);
    prime_generator_.push_back(static_cast<std::size_t>(it - all.begin()));
    prime_lambda_.push_back(ring_->gen(prime_generator_.back()));
  }

  // Partial fractions: c_i = (n/p_i)^{-1} mod p_i.
  lambda_ = ring_->zero();
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const PolyA cofactor = modulus_ / primes_[i];
    const PolyA c = inverse_mod(cofactor, primes_[i]);
    lambda_ += carlitz_action(c, prime_lambda_[i], cx);
  }

  residues_ = polys_below_degree(cx.base(), static_cast<unsigned>(modulus_.degree()));
  // C_beta(lambda) is F_q-linear in beta: combine C_{theta^j}(lambda).
  std::vector<RingElem> basis;
  for (int j = 0; j < modulus_.degree(); ++j)
    basis.push_back(carlitz_action(PolyA(Poly::monomial(cx.base(), 1, static_cast<std::size_t>(j))), lambda_, cx));
  exp_values_.reserve(residues_.size());
  for (const auto& beta : residues_) {
    RingElem v = ring_->zero();
    for (int j = 0; j <= beta.degree(); ++j)
      if (beta[j] != 0) v += basis[static_cast<std::size_t>(j)].scaled(cx.embed(beta[j]));
    exp_values_.push_back(std::move(v));
  }
}

std::size_t TorsionContext::residue_index(const PolyA& beta) const {
  const PolyA r = beta.degree() >= modulus_.degree() ? beta % modulus_ : beta;
  return static_cast<std::size_t>(code_of(r));
}

RingElem TorsionContext::galois(const RingElem& x, const PolyA& b) const {
  if (&x.ring() != ring_) throw RingMismatch("galois action on an element of another ring");
  std::vector<RingElem> images;
  for (std::size_t g = 0; g < ring_->generator_count(); ++g) images.push_back(ring_->gen(g));
  for (std::size_t i = 0; i < primes_.size(); ++i)
    images[prime_generator_[i]] = carlitz_action(b, prime_lambda_[i], *cx_);
  return substitute(x, images);
}

}  // namespace drinfeld
