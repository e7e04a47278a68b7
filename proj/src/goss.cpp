#include "drinfeld/goss.hpp"

#include <map>
#include <mutex>

#include "drinfeld/errors.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

int GossPolynomial::valuation() const {
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (!coeffs[j].is_zero()) return static_cast<int>(j);
  return -1;
}

std::string GossPolynomial::to_string(std::string_view var) const {
  std::string out;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = j == 0 ? "" : (j == 1 ? "X" : "X^" + std::to_string(j));
    if (coeffs[j].is_one() && !mono.empty()) {
      out += mono;
    } else {
      std::string c = coeffs[j].to_string(var);
      if (c.find('+') != std::string::npos && c.front() != '(') c = "(" + c + ")";
      out += mono.empty() ? c : c + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

Poly carlitz_factorial(const ConstantExtension& cx, unsigned i) {
  const FiniteField& E = cx.ext();
  Poly d = Poly::constant(E, 1);
  std::uint64_t qi = 1;
  for (unsigned j = 1; j <= i; ++j) {
    qi *= cx.q();
    d = (Poly::monomial(E, 1, qi) - Poly::variable(E)) * d.pow(cx.q());
  }
  return d;
}

namespace {

void trim(GossPolynomial& g) {
  while (!g.coeffs.empty() && g.coeffs.back().is_zero()) g.coeffs.pop_back();
}

// alpha_i = 1/D_i for all i with q^i <= k.
std::vector<std::pair<std::uint64_t, RatFunc>> exp_coefficients(const ConstantExtension& cx, int k) {
  std::vector<std::pair<std::uint64_t, RatFunc>> out;
  const FiniteField& E = cx.ext();
  std::uint64_t qi = 1;
  for (unsigned i = 0; qi <= static_cast<std::uint64_t>(k); ++i, qi *= cx.q())
    out.emplace_back(qi, RatFunc(Poly::constant(E, 1), carlitz_factorial(cx, i)));
  return out;
}

std::vector<GossPolynomial> recursive_all(const ConstantExtension& cx, int K) {
  const FiniteField& E = cx.ext();
  const auto alpha = exp_coefficients(cx, K);
  std::vector<GossPolynomial> G(static_cast<std::size_t>(K) + 1);
  if (K >= 1) G[1].coeffs = {RatFunc(E), RatFunc::constant(E, 1)};
  for (int n = 2; n <= K; ++n) {
    GossPolynomial s = G[static_cast<std::size_t>(n - 1)];
    for (std::size_t i = 1; i < alpha.size(); ++i) {
      const std::int64_t m = n - static_cast<std::int64_t>(alpha[i].first);
      if (m < 1) continue;
      const auto& g = G[static_cast<std::size_t>(m)].coeffs;
      if (s.coeffs.size() < g.size()) s.coeffs.resize(g.size(), RatFunc(E));
      for (std::size_t j = 0; j < g.size(); ++j)
        if (!g[j].is_zero()) s.coeffs[j] += g[j] * alpha[i].second;
    }
    GossPolynomial& out = G[static_cast<std::size_t>(n)];
    out.coeffs.assign(s.coeffs.size() + 1, RatFunc(E));
    for (std::size_t j = 0; j < s.coeffs.size(); ++j) out.coeffs[j + 1] = s.coeffs[j];
    trim(out);
  }
  return G;
}

std::vector<GossPolynomial> generating_all(const ConstantExtension& cx, int K) {
  const FiniteField& E = cx.ext();
  const auto alpha = exp_coefficients(cx, K);
  const std::size_t len = static_cast<std::size_t>(K);  // y^0..y^{K-1}
  std::vector<GossPolynomial> G(static_cast<std::size_t>(K) + 1);
  for (int k = 1; k <= K; ++k) G[static_cast<std::size_t>(k)].coeffs.assign(static_cast<std::size_t>(k) + 1, RatFunc(E));

  std::vector<RatFunc> power(len, RatFunc(E));  // e(y)^j
  power[0] = RatFunc::constant(E, 1);
  for (std::size_t j = 0; j < len; ++j) {
    // X^{j+1} [y^{k-1}] e^j contributes to G_k.
    for (std::size_t n = j; n < len; ++n)
      if (!power[n].is_zero()) G[n + 1].coeffs[j + 1] += power[n];
    std::vector<RatFunc> next(len, RatFunc(E));
    for (std::size_t n = 0; n < len; ++n) {
      if (power[n].is_zero()) continue;
      for (const auto& [deg, a] : alpha)
        if (n + deg < len) next[n + deg] += power[n] * a;
    }
    power = std::move(next);
  }
  for (auto& g : G) trim(g);
  return G;
}

}  // namespace

GossPolynomial goss_poly_recursive(const ConstantExtension& cx, int k) {
  if (k <= 0) throw InvalidArgument("Goss polynomial index must be positive");
  return recursive_all(cx, k)[static_cast<std::size_t>(k)];
}

GossPolynomial goss_poly_generating(const ConstantExtension& cx, int k) {
  if (k <= 0) throw InvalidArgument("Goss polynomial index must be positive");
  return generating_all(cx, k)[static_cast<std::size_t>(k)];
}

const GossPolynomial& goss_poly(const ConstantExtension& cx, int k) {
  if (k <= 0) throw InvalidArgument("Goss polynomial index must be positive");
  static std::mutex mu;
  // Map nodes keep returned references stable while the cache grows.
  static std::map<const ConstantExtension*, std::map<int, GossPolynomial>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& seq = cache[&cx];
  if (seq.find(k) == seq.end()) {
    const int K = std::max(k, 2 * static_cast<int>(seq.size()));
    auto rec = recursive_all(cx, K);
    auto gen = generating_all(cx, K);
    for (int n = 1; n <= K; ++n) {
      if (!(rec[static_cast<std::size_t>(n)] == gen[static_cast<std::size_t>(n)]))
        throw InternalError("Goss polynomial constructions disagree at k = " + std::to_string(n));
      seq.emplace(n, std::move(rec[static_cast<std::size_t>(n)]));
    }
  }
  return seq.at(k);
}

GossPolynomial goss_poly_torsion(const ConstantExtension& cx, const PolyA& modulus, int i) {
  if (!modulus.is_monic()) throw InvalidArgument("torsion modulus must be monic");
  if (i <= 0) throw InvalidArgument("Goss polynomial index must be positive");
  if (static_cast<std::uint32_t>(i) > cx.q())
    throw Unsupported("torsion-lattice Goss polynomial only available for index <= q");
  const FiniteField& E = cx.ext();
  GossPolynomial g;
  g.coeffs.assign(static_cast<std::size_t>(i) + 1, RatFunc(E));
  g.coeffs.back() = RatFunc::constant(E, 1);
  return g;
}

}  // namespace drinfeld
