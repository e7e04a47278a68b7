#include "drinfeld/quotient_ring.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

// Unreduced products of two reduced elements have exponent < 2d - 1 per
// generator; this layout indexes them.
struct ProductLayout {
  std::vector<std::size_t> ext_stride;
  std::vector<std::size_t> ext_extent;
  std::size_t cells = 1;
  std::vector<std::ptrdiff_t> reduced_index;  // -1 when some exponent >= d
};

const ProductLayout& layout_for(const QuotientRing& R) {
  static std::mutex mu;
  static std::map<const QuotientRing*, std::unique_ptr<ProductLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[&R];
  if (!slot) {
    auto L = std::make_unique<ProductLayout>();
    for (std::size_t g = 0; g < R.generator_count(); ++g) {
      L->ext_stride.push_back(L->cells);
      const std::size_t extent = 2 * R.generator_degree(g) - 1;
      L->ext_extent.push_back(extent);
      L->cells *= extent;
    }
    L->reduced_index.assign(L->cells, 0);
    for (std::size_t c = 0; c < L->cells; ++c) {
      std::ptrdiff_t idx = 0;
      for (std::size_t g = 0; g < R.generator_count(); ++g) {
        const std::size_t e = (c / L->ext_stride[g]) % L->ext_extent[g];
        if (e >= R.generator_degree(g)) {
          idx = -1;
          break;
        }
        idx += static_cast<std::ptrdiff_t>(e * R.stride(g));
      }
      L->reduced_index[c] = idx;
    }
    slot = std::move(L);
  }
  return *slot;
}

void require_same_ring(const RingElem& a, const RingElem& b) {
  if (&a.ring() != &b.ring())
    throw RingMismatch("ring elements live in different rings: " + a.ring().describe() + " vs " +
                       b.ring().describe());
}

}  // namespace

const QuotientRing& QuotientRing::get(const FiniteField& F, std::vector<Relation> relations) {
  std::sort(relations.begin(), relations.end(),
            [](const Relation& a, const Relation& b) { return a.tag < b.tag; });
  std::vector<std::string> tags;
  for (const auto& r : relations) {
    if (!tags.empty() && tags.back() == r.tag) throw InvalidArgument("duplicate relation tag " + r.tag);
    tags.push_back(r.tag);
  }
  static std::mutex mu;
  static std::map<std::pair<const FiniteField*, std::vector<std::string>>, std::unique_ptr<QuotientRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{&F, tags}];
  if (!slot) slot.reset(new QuotientRing(F, std::move(relations)));
  return *slot;
}

QuotientRing::QuotientRing(const FiniteField& F, std::vector<Relation> relations)
    : F_(&F), rel_(std::move(relations)), dim_(1) {
  for (const auto& r : rel_) {
    if (r.coeffs.size() < 2 || !r.coeffs.back().is_one())
      throw InvalidArgument("relation " + r.tag + " must be monic of positive degree");
    stride_.push_back(dim_);
    dim_ *= r.degree();
  }
}

std::optional<std::size_t> QuotientRing::find(std::string_view tag) const {
  for (std::size_t i = 0; i < rel_.size(); ++i)
    if (rel_[i].tag == tag) return i;
  return std::nullopt;
}

std::vector<std::size_t> QuotientRing::exponents(std::size_t index) const {
  std::vector<std::size_t> e(rel_.size());
  for (std::size_t g = 0; g < rel_.size(); ++g) e[g] = (index / stride_[g]) % rel_[g].degree();
  return e;
}

std::size_t QuotientRing::index(const std::vector<std::size_t>& e) const {
  std::size_t idx = 0;
  for (std::size_t g = 0; g < rel_.size(); ++g) idx += e[g] * stride_[g];
  return idx;
}

RingElem QuotientRing::zero() const {
  return RingElem(*this, std::vector<Poly>(dim_, Poly(*F_)), Poly::constant(*F_, 1));
}

RingElem QuotientRing::one() const { return scalar(Fe{1}); }

RingElem QuotientRing::gen(std::size_t i) const {
  std::vector<Poly> num(dim_, Poly(*F_));
  if (rel_[i].degree() == 1) {
    // x = -c_0 when the relation is linear.
    num[0] = -rel_[i].coeffs[0];
  } else {
    num[stride_[i]] = Poly::constant(*F_, 1);
  }
  return RingElem(*this, std::move(num), Poly::constant(*F_, 1));
}

RingElem QuotientRing::scalar(Fe c) const { return scalar(Poly::constant(*F_, c)); }

RingElem QuotientRing::scalar(const Poly& p) const {
  std::vector<Poly> num(dim_, Poly(*F_));
  num[0] = p;
  return RingElem(*this, std::move(num), Poly::constant(*F_, 1));
}

RingElem QuotientRing::scalar(const RatFunc& r) const {
  std::vector<Poly> num(dim_, Poly(*F_));
  num[0] = r.num();
  return RingElem(*this, std::move(num), r.den());
}

RingElem QuotientRing::from_terms(const std::map<std::vector<std::size_t>, RatFunc>& terms) const {
  RingElem acc = zero();
  for (const auto& [exps, c] : terms) {
    if (exps.size() != rel_.size()) throw InvalidArgument("exponent vector has the wrong length");
    RingElem term = scalar(c);
    for (std::size_t g = 0; g < exps.size(); ++g) term = term * gen(g).pow(exps[g]);
    acc += term;
  }
  return acc;
}

std::string QuotientRing::describe() const {
  std::string s = "GF(" + std::to_string(F_->size()) + ")(t)";
  if (rel_.empty()) return s;
  s += "[";
  for (std::size_t i = 0; i < rel_.size(); ++i) s += (i ? "," : "") + rel_[i].tag;
  return s + "]";
}

RingElem::RingElem(const QuotientRing& ring, std::vector<Poly> num, Poly den)
    : ring_(&ring), num_(std::move(num)), den_(std::move(den)) {
  if (num_.size() != ring.dim()) throw InvalidArgument("ring element has the wrong dimension");
  if (den_.is_zero()) throw NotInvertible("ring element with zero denominator");
  normalize();
}

void RingElem::normalize() {
  const FiniteField& F = ring_->field();
  bool all_zero = true;
  for (const auto& n : num_)
    if (!n.is_zero()) {
      all_zero = false;
      break;
    }
  if (all_zero) {
    den_ = Poly::constant(F, 1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = den_;
    for (const auto& n : num_) {
      if (n.is_zero()) continue;
      g = gcd(g, n);
      if (g.degree() == 0) break;
    }
    if (g.degree() > 0) {
      den_ = den_ / g;
      for (auto& n : num_)
        if (!n.is_zero()) n = n / g;
    }
  }
  if (den_.lead() != 1) {
    const Fe li = F.inv(den_.lead());
    den_ = den_.scaled(li);
    for (auto& n : num_) n = n.scaled(li);
  }
}

bool RingElem::is_zero() const {
  for (const auto& n : num_)
    if (!n.is_zero()) return false;
  return true;
}

bool RingElem::is_scalar() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (!num_[i].is_zero()) return false;
  return true;
}

bool RingElem::free_of(std::size_t g) const {
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (!num_[i].is_zero() && (i / ring_->stride(g)) % ring_->generator_degree(g) != 0) return false;
  return true;
}

RingElem& RingElem::operator+=(const RingElem& b) {
  require_same_ring(*this, b);
  if (b.is_zero()) return *this;
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += b.num_[i];
    if (den_.degree() > 0) normalize();
    else if (is_zero()) den_ = Poly::constant(ring_->field(), 1);
    return *this;
  }
  const Poly g = gcd(den_, b.den_);
  const Poly fa = b.den_ / g, fb = den_ / g;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    Poly n = num_[i] * fa;
    n.add_product(b.num_[i], fb);
    num_[i] = std::move(n);
  }
  den_ = den_ * fa;
  normalize();
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& b) { return *this += -b; }

RingElem RingElem::operator-() const {
  RingElem r = *this;
  for (auto& n : r.num_) n = -n;
  return r;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  const QuotientRing& R = a.ring();
  const FiniteField& F = R.field();
  if (a.is_scalar() || b.is_scalar()) {
    const RingElem& s = a.is_scalar() ? a : b;
    const RingElem& o = a.is_scalar() ? b : a;
    std::vector<Poly> num(R.dim(), Poly(F));
    for (std::size_t i = 0; i < num.size(); ++i)
      if (!o.num_[i].is_zero()) num[i] = o.num_[i] * s.num_[0];
    return RingElem(R, std::move(num), a.den_ * b.den_);
  }

  const ProductLayout& L = layout_for(R);
  const std::size_t G = R.generator_count();
  auto ext_of = [&](std::size_t idx) {
    std::size_t c = 0;
    for (std::size_t g = 0; g < G; ++g)
      c += ((idx / R.stride(g)) % R.generator_degree(g)) * L.ext_stride[g];
    return c;
  };
  std::vector<std::pair<std::size_t, const Poly*>> as, bs;
  for (std::size_t i = 0; i < R.dim(); ++i) {
    if (!a.num_[i].is_zero()) as.emplace_back(ext_of(i), &a.num_[i]);
    if (!b.num_[i].is_zero()) bs.emplace_back(ext_of(i), &b.num_[i]);
  }
  std::vector<Poly> acc(L.cells, Poly(F));
  for (const auto& [ia, pa] : as)
    for (const auto& [ib, pb] : bs) acc[ia + ib].add_product(*pa, *pb);

  for (std::size_t g = 0; g < G; ++g) {
    const std::size_t d = R.generator_degree(g);
    const auto& rel = R.relation(g).coeffs;
    const std::size_t st = L.ext_stride[g];
    for (std::size_t e = 2 * d - 2; e >= d; --e) {
      for (std::size_t c = 0; c < L.cells; ++c) {
        if ((c / st) % L.ext_extent[g] != e || acc[c].is_zero()) continue;
        const Poly t = std::move(acc[c]);
        acc[c] = Poly(F);
        const std::size_t base = c - (d)*st;  // exponent e - d
        for (std::size_t j = 0; j < d; ++j)
          if (!rel[j].is_zero()) acc[base + j * st].sub_product(t, rel[j]);
      }
      if (e == 0) break;
    }
  }
  std::vector<Poly> num(R.dim(), Poly(F));
  for (std::size_t c = 0; c < L.cells; ++c)
    if (L.reduced_index[c] >= 0 && !acc[c].is_zero()) num[L.reduced_index[c]] = std::move(acc[c]);
  return RingElem(R, std::move(num), a.den_ * b.den_);
}

bool operator==(const RingElem& a, const RingElem& b) {
  return a.ring_ == b.ring_ && a.den_ == b.den_ && a.num_ == b.num_;
}

RingElem RingElem::scaled(Fe s) const {
  RingElem r = *this;
  for (auto& n : r.num_) n = n.scaled(s);
  if (s == 0) r.den_ = Poly::constant(ring_->field(), 1);
  return r;
}

RingElem RingElem::scaled(const Poly& p) const {
  std::vector<Poly> num(num_.size(), Poly(ring_->field()));
  for (std::size_t i = 0; i < num.size(); ++i)
    if (!num_[i].is_zero()) num[i] = num_[i] * p;
  return RingElem(*ring_, std::move(num), den_);
}

RingElem RingElem::scaled(const RatFunc& r) const {
  std::vector<Poly> num(num_.size(), Poly(ring_->field()));
  for (std::size_t i = 0; i < num.size(); ++i)
    if (!num_[i].is_zero()) num[i] = num_[i] * r.num();
  return RingElem(*ring_, std::move(num), den_ * r.den());
}

RingElem RingElem::pow(std::uint64_t e) const {
  RingElem r = ring_->one(), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::string RingElem::to_string(std::string_view var, const std::vector<std::string>& names) const {
  std::string body;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i].is_zero()) continue;
    std::string mono;
    const auto e = ring_->exponents(i);
    for (std::size_t g = 0; g < e.size(); ++g) {
      if (e[g] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += g < names.size() ? names[g] : "L" + std::to_string(g + 1);
      if (e[g] > 1) mono += "^" + std::to_string(e[g]);
    }
    std::string coeff = num_[i].to_string(var);
    if (!body.empty()) body += " + ";
    if (mono.empty()) {
      body += num_[i].coeffs().size() > 1 ? "(" + coeff + ")" : coeff;
    } else if (num_[i].is_one()) {
      body += mono;
    } else {
      body += "(" + coeff + ")*" + mono;
    }
  }
  if (body.empty()) return "0";
  if (den_.is_one()) return body;
  return "(" + body + ")/(" + den_.to_string(var) + ")";
}

namespace {

using RPoly = std::vector<RatFunc>;  // polynomial in x over F(theta)

void rtrim(RPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RPoly rmul(const RPoly& a, const RPoly& b, const FiniteField& F) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, RatFunc(F));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
  rtrim(r);
  return r;
}

RPoly rsub(RPoly a, const RPoly& b, const FiniteField& F) {
  if (a.size() < b.size()) a.resize(b.size(), RatFunc(F));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rtrim(a);
  return a;
}

void rdivmod(const RPoly& a, const RPoly& b, RPoly& q, RPoly& r, const FiniteField& F) {
  r = a;
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, RatFunc(F));
  const RatFunc li = b.back().inv();
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size() - 1;; --i) {
    if (!r[i].is_zero()) {
      const RatFunc f = r[i] * li;
      q[i - db] = f;
      for (std::size_t j = 0; j < b.size(); ++j) r[i - db + j] -= f * b[j];
    }
    if (i == db) break;
  }
  rtrim(r);
  rtrim(q);
}

RingElem invert_single(const RingElem& x) {
  const QuotientRing& R = x.ring();
  const FiniteField& F = R.field();
  RPoly a(R.dim(), RatFunc(F)), m;
  for (std::size_t i = 0; i < R.dim(); ++i) a[i] = x.component(i);
  rtrim(a);
  for (const auto& c : R.relation(0).coeffs) m.push_back(RatFunc(c));
  // Extended Euclid tracking only the cofactor of a.
  RPoly r0 = m, r1 = a, s0, s1{RatFunc::constant(F, 1)};
  while (!r1.empty()) {
    RPoly q, r;
    rdivmod(r0, r1, q, r, F);
    RPoly s2 = rsub(s0, rmul(q, s1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw NotInvertible("element is a zero divisor in " + R.describe());
  const RatFunc g = r0[0].inv();
  RingElem out = R.zero();
  for (std::size_t i = 0; i < s0.size(); ++i) out += R.scalar(s0[i] * g) * R.gen(0).pow(i);
  return out;
}

RingElem invert_linear(const RingElem& x) {
  const QuotientRing& R = x.ring();
  const FiniteField& F = R.field();
  const std::size_t n = R.dim();
  // Column j of M is x * e_j.
  std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n + 1, RatFunc(F)));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Poly> basis(n, Poly(F));
    basis[j] = Poly::constant(F, 1);
    const RingElem col = x * RingElem(R, std::move(basis), Poly::constant(F, 1));
    for (std::size_t i = 0; i < n; ++i) M[i][j] = col.component(i);
  }
  M[0][n] = RatFunc::constant(F, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && M[piv][c].is_zero()) ++piv;
    if (piv == n) throw NotInvertible("element is a zero divisor in " + R.describe());
    std::swap(M[c], M[piv]);
    const RatFunc inv = M[c][c].inv();
    for (std::size_t k = c; k <= n; ++k) M[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || M[r][c].is_zero()) continue;
      const RatFunc f = M[r][c];
      for (std::size_t k = c; k <= n; ++k)
        if (!M[c][k].is_zero()) M[r][k] -= f * M[c][k];
    }
  }
  // Bring the solution to a common denominator.
  Poly den = Poly::constant(F, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& d = M[i][n].den();
    den = den * (d / gcd(den, d));
  }
  std::vector<Poly> num(n, Poly(F));
  for (std::size_t i = 0; i < n; ++i) num[i] = M[i][n].num() * (den / M[i][n].den());
  return RingElem(R, std::move(num), den);
}

}  // namespace

RingElem ring_invert(const RingElem& x) {
  if (x.is_zero()) throw NotInvertible("inverse of zero");
  const QuotientRing& R = x.ring();
  if (x.is_scalar()) return R.scalar(x.scalar_part().inv());
  if (R.generator_count() == 1) return invert_single(x);
  return invert_linear(x);
}

namespace {

std::vector<std::size_t> generator_map(const QuotientRing& from, const QuotientRing& to) {
  std::vector<std::size_t> map;
  for (std::size_t g = 0; g < from.generator_count(); ++g) {
    auto t = to.find(from.relation(g).tag);
    if (!t) throw RingMismatch("generator " + from.relation(g).tag + " is missing from " + to.describe());
    map.push_back(*t);
  }
  return map;
}

}  // namespace

RingElem embed(const RingElem& x, const QuotientRing& target) {
  const QuotientRing& R = x.ring();
  if (&R == &target) return x;
  if (&R.field() != &target.field()) throw RingMismatch("rings over different constant fields");
  const auto map = generator_map(R, target);
  std::vector<Poly> num(target.dim(), Poly(target.field()));
  for (std::size_t i = 0; i < R.dim(); ++i) {
    if (x.numerator(i).is_zero()) continue;
    const auto e = R.exponents(i);
    std::size_t idx = 0;
    for (std::size_t g = 0; g < e.size(); ++g) idx += e[g] * target.stride(map[g]);
    num[idx] = x.numerator(i);
  }
  return RingElem(target, std::move(num), x.denominator());
}

RingElem restrict_to(const RingElem& x, const QuotientRing& target) {
  const QuotientRing& R = x.ring();
  if (&R == &target) return x;
  if (&R.field() != &target.field()) throw RingMismatch("rings over different constant fields");
  const auto map = generator_map(target, R);
  std::vector<Poly> num(target.dim(), Poly(target.field()));
  for (std::size_t i = 0; i < R.dim(); ++i) {
    if (x.numerator(i).is_zero()) continue;
    auto e = R.exponents(i);
    std::size_t idx = 0;
    for (std::size_t g = 0; g < target.generator_count(); ++g) {
      idx += e[map[g]] * target.stride(g);
      e[map[g]] = 0;
    }
    for (std::size_t g = 0; g < e.size(); ++g)
      if (e[g] != 0)
        throw RingMismatch("element involves generator " + R.relation(g).tag + " absent from " + target.describe());
    num[idx] = x.numerator(i);
  }
  return RingElem(target, std::move(num), x.denominator());
}

RingElem substitute(const RingElem& x, const std::vector<RingElem>& images) {
  const QuotientRing& R = x.ring();
  if (images.size() != R.generator_count()) throw InvalidArgument("substitution needs one image per generator");
  if (images.empty()) return x;
  const QuotientRing& T = images[0].ring();
  std::vector<std::vector<RingElem>> powers(images.size());
  for (std::size_t g = 0; g < images.size(); ++g) {
    powers[g].push_back(T.one());
    for (std::size_t e = 1; e < R.generator_degree(g); ++e) powers[g].push_back(powers[g].back() * images[g]);
  }
  RingElem acc = T.zero();
  for (std::size_t i = 0; i < R.dim(); ++i) {
    if (x.numerator(i).is_zero()) continue;
    const auto e = R.exponents(i);
    RingElem term = T.scalar(x.numerator(i));
    for (std::size_t g = 0; g < e.size(); ++g)
      if (e[g] > 0) term = term * powers[g][e[g]];
    acc += term;
  }
  return acc.scaled(RatFunc(Poly::constant(R.field(), 1), x.denominator()));
}

std::size_t rank_over_field(std::vector<std::vector<RingElem>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const RingElem inv = ring_invert(rows[rank][c]);
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] = rows[rank][k] * inv;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const RingElem f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!rows[rank][k].is_zero()) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace drinfeld
