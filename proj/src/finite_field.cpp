#include "drinfeld/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "drinfeld/errors.hpp"

namespace drinfeld {
namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 20;
constexpr std::uint32_t kMaxAddTable = 1024;

// Dense polynomials over F_p used only while choosing a defining polynomial.
using Fp = std::vector<std::uint32_t>;

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_mod(Fp a, const Fp& m, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = [&] {
    std::uint32_t l = m.back();
    for (std::uint32_t x = 1; x < p; ++x)
      if ((static_cast<std::uint64_t>(l) * x) % p == 1) return x;
    return 1u;
  }();
  while (a.size() >= m.size()) {
    const std::uint64_t c = (static_cast<std::uint64_t>(a.back()) * lead_inv) % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (c * m[i]) % p) % p);
    trim(a);
  }
  return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return fp_mod(std::move(r), m, p);
}

Fp fp_powmod(Fp base, std::uint64_t e, const Fp& m, std::uint32_t p) {
  Fp r{1};
  base = fp_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = fp_mulmod(r, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Fp fp_gcd(Fp a, Fp b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// Rabin's test.
bool fp_irreducible(const Fp& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  const Fp x{0, 1};
  auto x_pow_p_k = [&](std::size_t k) {
    Fp r = x;
    for (std::size_t i = 0; i < k; ++i) r = fp_powmod(r, p, f, p);
    return r;
  };
  auto minus_x = [&](Fp a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(x_pow_p_k(n)).empty()) return false;
  for (std::uint32_t r : prime_factors(n)) {
    Fp g = fp_gcd(f, minus_x(x_pow_p_k(n / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) throw InvalidArgument("field size must be a prime power, got " + std::to_string(q));
  auto f = prime_factors(q);
  if (f.size() != 1) throw InvalidArgument("field size must be a prime power, got " + std::to_string(q));
  std::uint32_t e = 0;
  for (std::uint32_t r = q; r > 1; r /= f[0]) ++e;
  return {f[0], e};
}

const FiniteField& FiniteField::get(std::uint32_t p, std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, n}];
  if (!slot) slot.reset(new FiniteField(p, n));
  return *slot;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t n) : p_(p), n_(n), size_(1) {
  if (n == 0 || prime_factors(p).size() != 1 || prime_factors(p)[0] != p)
    throw InvalidArgument("GF(p^n) needs a prime p and n >= 1");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (static_cast<std::uint64_t>(size_) * p > kMaxFieldSize)
      throw Unsupported("finite field too large: " + std::to_string(p) + "^" + std::to_string(n));
    size_ *= p;
  }

  // Smallest monic irreducible of degree n, ordering by the code of the
  // lower coefficients.
  for (std::uint32_t code = 0; code < size_; ++code) {
    Fp f(n + 1, 0);
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[n] = 1;
    if (fp_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  neg_.resize(size_);
  for (Fe a = 0; a < size_; ++a) {
    auto d = digits(a);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = from_digits(d);
  }
  if (size_ <= kMaxAddTable) {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (Fe a = 0; a < size_; ++a)
      for (Fe b = 0; b < size_; ++b) add_table_[a * size_ + b] = add_digits(a, b);
  }

  const std::uint32_t order = size_ - 1;
  const auto ofactors = prime_factors(order);
  auto slow_pow = [&](Fe a, std::uint64_t e) {
    Fe r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  Fe gen = 1;
  for (Fe g = 1; g < size_; ++g) {
    bool primitive = true;
    for (auto r : ofactors)
      if (slow_pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = g;
      break;
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(order) + 1);
  log_.assign(size_, 0);
  Fe x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = i;
    x = slow_mul(x, gen);
  }
  exp_[2 * order] = 1;
}

Fe FiniteField::add_digits(Fe a, Fe b) const {
  Fe r = 0, scale = 1;
  while (a > 0 || b > 0) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Fe FiniteField::slow_mul(Fe a, Fe b) const {
  Fp x = digits(a), y = digits(b);
  return from_digits(fp_mulmod(x, y, modulus_, p_));
}

Fe FiniteField::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return static_cast<Fe>(((v % p) + p) % p);
}

Fe FiniteField::inv(Fe a) const {
  if (a == 0) throw NotInvertible("division by zero in GF(" + std::to_string(size_) + ")");
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

Fe FiniteField::pow(Fe a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw NotInvertible("zero to a negative power");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t order = size_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (((e % order) + order) % order)) % order;
  return exp_[k];
}

std::uint32_t FiniteField::log(Fe a) const {
  if (a == 0) throw InvalidArgument("log of zero");
  return log_[a];
}

std::vector<std::uint32_t> FiniteField::digits(Fe a) const {
  std::vector<std::uint32_t> d(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Fe FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  Fe r = 0, scale = 1;
  for (std::size_t i = 0; i < d.size() && i < n_; ++i) {
    r += (d[i] % p_) * scale;
    scale *= p_;
  }
  return r;
}

std::string FiniteField::to_string(Fe a) const {
  if (a < p_) return std::to_string(a);
  auto d = digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i > 0) {
      if (d[i] != 1) out += "*";
      out += "y";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return "(" + out + ")";
}

const ConstantExtension& ConstantExtension::get(std::uint32_t q, std::uint32_t D) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<ConstantExtension>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{q, D}];
  if (!slot) slot.reset(new ConstantExtension(q, D));
  return *slot;
}

ConstantExtension::ConstantExtension(std::uint32_t q, std::uint32_t D) : D_(D) {
  if (D == 0) throw InvalidArgument("extension degree must be positive");
  auto [p, e] = prime_power(q);
  base_ = &FiniteField::get(p, e);
  ext_ = &FiniteField::get(p, e * D);

  // Root of the base modulus inside the extension.
  const auto& m = base_->modulus();
  Fe root = 0;
  bool found = false;
  for (Fe r = 0; r < ext_->size() && !found; ++r) {
    Fe acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = ext_->add(ext_->mul(acc, r), m[i]);
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw InternalError("base field does not embed into its extension");

  embed_.resize(base_->size());
  preimage_.assign(ext_->size(), -1);
  for (Fe a = 0; a < base_->size(); ++a) {
    auto d = base_->digits(a);
    Fe acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = ext_->add(ext_->mul(acc, root), d[i]);
    embed_[a] = acc;
    preimage_[acc] = a;
  }
}

bool ConstantExtension::in_base(Fe x) const { return preimage_[x] >= 0; }

Fe ConstantExtension::to_base(Fe x) const {
  if (preimage_[x] < 0) throw InvalidArgument("element does not lie in the base field");
  return static_cast<Fe>(preimage_[x]);
}

}  // namespace drinfeld
