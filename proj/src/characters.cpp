#include "drinfeld/characters.hpp"

#include <algorithm>
#include <cctype>

#include "drinfeld/errors.hpp"

namespace drinfeld {

Fe canonical_root(const ConstantExtension& cx, const PolyA& prime) {
  for (Fe x = 0; x < cx.ext().size(); ++x)
    if (prime.eval(cx, x) == 0) return x;
  throw InvalidArgument(prime.to_string() + " has no root in GF(" + std::to_string(cx.ext().size()) + ")");
}

DirichletCharacter::DirichletCharacter(const ConstantExtension& cx, std::vector<Factor> factors)
    : cx_(&cx), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) { return a.prime < b.prime; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Factor& f = factors_[i];
    if (i > 0 && factors_[i - 1].prime == f.prime) throw InvalidArgument("repeated prime " + f.prime.to_string());
    if (!f.prime.is_monic() || !is_irreducible(f.prime))
      throw NotSquareFree("character modulus factor " + f.prime.to_string() + " is not a monic prime");
    if (f.prime.eval(cx, f.root) != 0)
      throw InvalidArgument(cx.ext().to_string(f.root) + " is not a root of " + f.prime.to_string());
    if (f.exponent >= f.prime.abs() - 1)
      throw InvalidArgument("exponent " + std::to_string(f.exponent) + " out of range for " + f.prime.to_string());
  }
}

DirichletCharacter DirichletCharacter::power_of_root(const ConstantExtension& cx, const PolyA& prime, std::uint64_t e) {
  const std::uint64_t order = prime.abs() - 1;
  return DirichletCharacter(cx, {{prime, canonical_root(cx, prime), e % order}});
}

PolyA DirichletCharacter::modulus() const {
  PolyA m = PolyA::one(cx_->base());
  for (const auto& f : factors_) m = m * f.prime;
  return m;
}

std::vector<PolyA> DirichletCharacter::primes() const {
  std::vector<PolyA> out;
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

std::uint64_t DirichletCharacter::sign() const {
  const std::uint64_t q1 = cx_->q() - 1;
  std::uint64_t s = 0;
  for (const auto& f : factors_) s = (s + f.exponent) % q1;
  return s;
}

bool DirichletCharacter::primitive() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exponent > 0; });
}

bool DirichletCharacter::is_trivial() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exponent == 0; });
}

DirichletCharacter DirichletCharacter::inverse() const {
  auto fs = factors_;
  for (auto& f : fs) {
    const std::uint64_t order = f.prime.abs() - 1;
    f.exponent = (order - f.exponent) % order;
  }
  return DirichletCharacter(*cx_, std::move(fs));
}

Fe DirichletCharacter::operator()(const PolyA& a) const {
  const FiniteField& E = cx_->ext();
  Fe v = 1;
  for (const auto& f : factors_) {
    if (f.exponent == 0) continue;
    v = E.mul(v, E.pow(a.eval(*cx_, f.root), static_cast<std::int64_t>(f.exponent)));
    if (v == 0) return 0;
  }
  return v;
}

Fe DirichletCharacter::on_units(const PolyA& a) const {
  for (const auto& f : factors_)
    if (a.eval(*cx_, f.root) == 0) return 0;
  return (*this)(a);
}

DirichletCharacter DirichletCharacter::with_roots(const std::vector<Fe>& roots) const {
  if (roots.size() != factors_.size()) throw InvalidArgument("one root per prime expected");
  const FiniteField& E = cx_->ext();
  auto fs = factors_;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::uint64_t d = static_cast<std::uint64_t>(fs[i].prime.degree());
    const std::uint64_t order = fs[i].prime.abs() - 1;
    Fe r = fs[i].root;
    std::uint64_t j = 0;
    while (j < d && r != roots[i]) {
      r = E.pow(r, cx_->q());
      ++j;
    }
    if (r != roots[i]) throw InvalidArgument("replacement root is not a conjugate of the original");
    // a(root^{q^j}) = a(root)^{q^j}, so the exponent scales by q^{-j} = q^{d-j}.
    std::uint64_t scale = 1;
    for (std::uint64_t t = 0; t < (d - j) % d; ++t) scale = scale * cx_->q() % order;
    fs[i].root = roots[i];
    fs[i].exponent = order == 0 ? 0 : fs[i].exponent * scale % order;
  }
  return DirichletCharacter(*cx_, std::move(fs));
}

std::string DirichletCharacter::to_string(std::string_view var) const {
  std::string s = "chi{";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (i) s += "; ";
    s += "p=" + f.prime.to_string(var) + "; zeta=" + std::to_string(f.root) + "; e=" + std::to_string(f.exponent);
  }
  return s + "}";
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.cx_ != b.cx_ || a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    const auto& x = a.factors_[i];
    const auto& y = b.factors_[i];
    if (!(x.prime == y.prime) || x.root != y.root || x.exponent != y.exponent) return false;
  }
  return true;
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (&a.constants() != &b.constants()) throw RingMismatch("characters over different constant fields");
  auto fs = a.factors();
  for (const auto& g : b.factors()) {
    auto it = std::find_if(fs.begin(), fs.end(), [&](const auto& f) { return f.prime == g.prime; });
    if (it == fs.end()) {
      fs.push_back(g);
      continue;
    }
    const DirichletCharacter single(a.constants(), {g});
    const auto aligned = single.with_roots({it->root}).factors()[0];
    const std::uint64_t order = g.prime.abs() - 1;
    it->exponent = (it->exponent + aligned.exponent) % order;
  }
  return DirichletCharacter(a.constants(), std::move(fs));
}

std::vector<DirichletCharacter> characters_mod(const ConstantExtension& cx, const PolyA& modulus, bool primitive_only) {
  const auto primes = squarefree_factors(modulus);
  std::vector<Fe> roots;
  std::vector<std::uint64_t> orders;
  for (const auto& p : primes) {
    roots.push_back(canonical_root(cx, p));
    orders.push_back(p.abs() - 1);
  }
  const std::uint64_t start = primitive_only ? 1 : 0;
  std::vector<std::uint64_t> e(primes.size(), start);
  std::vector<DirichletCharacter> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (orders[i] <= start) return out;
  while (true) {
    std::vector<DirichletCharacter::Factor> fs;
    for (std::size_t i = 0; i < primes.size(); ++i) fs.push_back({primes[i], roots[i], e[i]});
    out.emplace_back(cx, std::move(fs));
    // Last prime varies fastest.
    std::size_t i = primes.size();
    while (i > 0) {
      --i;
      if (++e[i] < orders[i]) break;
      e[i] = start;
      if (i == 0) return out;
    }
    if (primes.empty()) return out;
  }
}

CharacterLiteral parse_character_literal(const FiniteField& base, std::string_view text, std::string_view var) {
  auto trim = [](std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
      ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::size_t offset = 0;
  std::string_view body = trim(text, offset);
  if (body.substr(0, 4) != "chi{") throw ParseError("character literal must start with 'chi{'", offset);
  if (body.empty() || body.back() != '}') throw ParseError("character literal must end with '}'", offset + body.size());
  offset += 4;
  body = body.substr(4, body.size() - 5);

  CharacterLiteral lit;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(';', pos);
    if (end == std::string_view::npos) end = body.size();
    std::size_t item_off = offset + pos;
    std::string_view item = trim(body.substr(pos, end - pos), item_off);
    pos = end + 1;
    if (item.empty()) {
      if (end == body.size()) break;
      continue;
    }
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", item_off);
    std::size_t key_off = item_off, val_off = item_off + eq + 1;
    const std::string_view key = trim(item.substr(0, eq), key_off);
    const std::string_view val = trim(item.substr(eq + 1), val_off);
    if (key == "p") {
      try {
        lit.primes.push_back(PolyA::parse(base, val, var));
      } catch (const ParseError& e) {
        throw ParseError("bad prime in character literal", val_off + e.position());
      }
      lit.roots.emplace_back(std::nullopt);
      lit.exponents.push_back(1);
    } else if (key == "zeta" || key == "e") {
      if (lit.primes.empty()) throw ParseError("'" + std::string(key) + "' before any 'p='", key_off);
      if (key == "zeta" && val == "auto") {
        lit.roots.back() = std::nullopt;
        continue;
      }
      std::uint64_t v = 0;
      if (val.empty()) throw ParseError("expected an integer", val_off);
      for (std::size_t i = 0; i < val.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(val[i]))) throw ParseError("expected an integer", val_off + i);
        v = v * 10 + static_cast<std::uint64_t>(val[i] - '0');
        if (v > (1ull << 40)) throw ParseError("integer too large", val_off + i);
      }
      if (key == "zeta") lit.roots.back() = static_cast<Fe>(v);
      else lit.exponents.back() = v;
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", key_off);
    }
    if (end == body.size()) break;
  }
  if (lit.primes.empty()) throw ParseError("character literal names no prime", offset);
  return lit;
}

DirichletCharacter character_from_literal(const ConstantExtension& cx, const CharacterLiteral& lit) {
  std::vector<DirichletCharacter::Factor> fs;
  for (std::size_t i = 0; i < lit.primes.size(); ++i) {
    const PolyA& p = lit.primes[i];
    const Fe root = lit.roots[i] ? *lit.roots[i] : canonical_root(cx, p);
    if (root >= cx.ext().size()) throw InvalidArgument("root code out of range");
    fs.push_back({p, root, lit.exponents[i]});
  }
  return DirichletCharacter(cx, std::move(fs));
}

namespace {

void require_pair(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (!(a.modulus() == b.modulus()))
    throw ConductorMismatch("characters have conductors " + a.modulus().to_string() + " and " + b.modulus().to_string());
  if (!a.primitive() || !b.primitive()) throw ConductorMismatch("convolution lemma needs primitive characters");
}

}  // namespace

Fe convolve(const DirichletCharacter& chi1, const DirichletCharacter& chi2, const PolyA& delta) {
  require_pair(chi1, chi2);
  const ConstantExtension& cx = chi1.constants();
  const FiniteField& E = cx.ext();
  Fe acc = 0;
  for (const auto& a : polys_below_degree(cx.base(), static_cast<unsigned>(chi1.modulus().degree())))
    acc = E.add(acc, E.mul(chi1(a), chi2(delta - a)));
  return acc;
}

JacobiFactor jacobi_factor(const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  require_pair(chi1, chi2);
  const ConstantExtension& cx = chi1.constants();
  const FiniteField& E = cx.ext();
  std::vector<Fe> roots;
  for (const auto& f : chi1.factors()) roots.push_back(f.root);
  const DirichletCharacter c2 = chi2.with_roots(roots);
  Fe factor = 1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::uint64_t j = chi1.factors()[i].exponent;
    const std::uint64_t k = c2.factors()[i].exponent;
    const std::uint64_t order = chi1.factors()[i].prime.abs() - 1;
    Fe b = E.from_int(lucas_binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(order - j),
                                     E.characteristic()));
    if ((1 + j) % 2 == 1) b = E.neg(b);  // (-1)^{1-j}
    factor = E.mul(factor, b);
  }
  return {factor, chi1 * c2};
}

RingElem gauss_thakur(const DirichletCharacter& chi, const TorsionContext& ctx) {
  if (!chi.primitive()) throw NotPrimitive("Gauss-Thakur sum needs a primitive character");
  if (!(chi.modulus() == ctx.modulus()))
    throw ConductorMismatch("torsion modulus " + ctx.modulus().to_string() + " differs from conductor " +
                            chi.modulus().to_string());
  const ConstantExtension& cx = chi.constants();
  const FiniteField& E = cx.ext();
  const QuotientRing& R = ctx.ring();
  const auto ring_primes = carlitz_primes(R);
  RingElem g = R.one();
  for (const auto& f : chi.factors()) {
    const TorsionContext& pc = TorsionContext::get(cx, f.prime, ring_primes);
    std::uint64_t e = f.exponent;
    Fe root_j = f.root;  // zeta^{q^j}
    for (int j = 0; e > 0; ++j, e /= cx.q(), root_j = E.pow(root_j, cx.q())) {
      const std::uint64_t digit = e % cx.q();
      if (digit == 0) continue;
      RingElem basic = R.zero();
      for (std::size_t idx = 1; idx < pc.residues().size(); ++idx) {
        const Fe v = pc.residues()[idx].eval(cx, root_j);
        basic += pc.exp_value(idx).scaled(E.inv(v));
      }
      g = g * basic.pow(digit);
    }
  }
  return g;
}

RingElem char_sum_s(const DirichletCharacter& chi, std::uint64_t k, const TorsionContext& ctx) {
  if (!(chi.modulus() == ctx.modulus()))
    throw ConductorMismatch("torsion modulus differs from the character's modulus");
  const DirichletCharacter inv = chi.inverse();
  RingElem acc = ctx.ring().zero();
  for (std::size_t idx = 0; idx < ctx.residues().size(); ++idx) {
    const Fe w = inv(ctx.residues()[idx]);
    if (w != 0) acc += ctx.exp_value(idx).pow(k).scaled(w);
  }
  return acc;
}

}  // namespace drinfeld
