#include "drinfeld/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "drinfeld/errors.hpp"
#include "drinfeld/forms.hpp"

namespace drinfeld {

std::vector<TablePair> table_pairs(std::uint32_t q, const PolyA& n, int range) {
  if (!n.is_monic() || !is_irreducible(n)) throw InvalidArgument("table modulus must be a monic prime");
  const ConstantExtension& cx = ConstantExtension::get(q, static_cast<std::uint32_t>(n.degree()));
  const TorsionContext& ctx = TorsionContext::get(cx, n);
  const FiniteField& E = cx.ext();
  const Fe zeta = canonical_root(cx, n);
  const std::uint64_t order = n.abs() - 1;
  const std::size_t R = ctx.residues().size();
  std::vector<Fe> at_zeta(R);
  for (std::size_t b = 0; b < R; ++b) at_zeta[b] = ctx.residues()[b].eval(cx, zeta);

  std::vector<TablePair> out;
  std::vector<RingElem> powers(R, ctx.ring().one());
  for (int j = 1; j <= range; ++j) {
    for (std::size_t b = 1; b < R; ++b) powers[b] = powers[b] * ctx.exp_value(b);
    for (int i = 1; i <= range; ++i) {
      const std::int64_t e = static_cast<std::int64_t>(order) - i;
      const std::uint64_t ered = static_cast<std::uint64_t>(((e % static_cast<std::int64_t>(order)) +
                                                             static_cast<std::int64_t>(order)) %
                                                            static_cast<std::int64_t>(order));
      RingElem acc = ctx.ring().zero();
      for (std::size_t b = 1; b < R; ++b) {
        const Fe w = ered == 0 ? Fe{1} : E.pow(at_zeta[b], static_cast<std::int64_t>(ered));
        if (w != 0) acc += powers[b].scaled(w);
      }
      if (!acc.is_zero()) out.emplace_back(j, i);
    }
  }
  return out;
}

const std::vector<TablePair>& golden_table() {
  static const std::vector<TablePair> golden = [] {
    const std::vector<std::vector<int>> rows = {
        {1, 1, 5},
        {2, 2, 6, 10},
        {3, 3, 7, 11, 15},
        {4, 4, 8, 12, 16, 20},
        {5, 1, 5},
        {6, 2, 6, 10},
        {7, 3, 7, 11, 15},
        {8, 4, 8, 12, 16, 20},
        {9, 1, 5, 9, 13, 17, 21},
        {10, 2, 6, 10},
        {11, 3, 7, 11, 15},
        {12, 4, 8, 12, 16, 20},
        {13, 1, 5, 9, 13, 17, 21},
        {14, 2, 6, 10, 14, 18, 22},
        {15, 3, 7, 11, 15},
        {16, 4, 8, 12, 16, 20},
        {17, 1, 5, 9, 13, 17, 21},
        {18, 2, 6, 10, 14, 18, 22},
        {19, 3, 7, 11, 15, 19, 23},
        {20, 4, 8, 12, 16, 20},
        {21, 1, 5, 9, 13, 17, 21},
        {22, 2, 6, 10, 14, 18, 22},
        {23, 3, 7, 11, 15, 19, 23},
    };
    std::vector<TablePair> v;
    for (const auto& r : rows)
      for (std::size_t k = 1; k < r.size(); ++k) v.emplace_back(r[0], r[k]);
    return v;
  }();
  return golden;
}

std::string format_table(const std::vector<TablePair>& pairs) {
  if (pairs.empty()) return "";
  std::string out = "[j, i]:\n\n";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out += "[" + std::to_string(pairs[k].first) + ", " + std::to_string(pairs[k].second) + "]";
    if (k + 1 == pairs.size()) out += ".\n";
    else if (pairs[k + 1].first != pairs[k].first) out += ",\n";
    else out += ", ";
  }
  return out;
}

unsigned thread_count() {
  if (const char* env = std::getenv("DRINFELD_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> run_parallel(const std::vector<std::function<VerificationReport()>>& jobs) {
  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = jobs[i]();
      } catch (const std::exception& e) {
        out[i].identity = "error";
        out[i].pass = false;
        out[i].witness = e.what();
      }
    }
  };
  const unsigned n = std::min<std::size_t>(thread_count(), std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

namespace {

using Job = std::function<VerificationReport()>;

struct Setup {
  std::uint32_t q;
  const FiniteField* base;
};

Setup setup(const SuiteOptions& opt, std::uint32_t default_q) {
  const std::uint32_t q = opt.q.value_or(default_q);
  const auto [p, e] = prime_power(q);
  if (e != 1) throw InvalidArgument("polynomial literals need a prime q");
  return {q, &FiniteField::get(p, 1)};
}

PolyA poly(const Setup& s, std::string_view text, const SuiteOptions& opt) {
  return PolyA::parse(*s.base, text, opt.var);
}

std::vector<PolyA> moduli(const Setup& s, const SuiteOptions& opt, const std::vector<std::string>& defaults) {
  std::vector<PolyA> out;
  if (opt.modulus) out.push_back(poly(s, *opt.modulus, opt));
  else
    for (const auto& d : defaults) out.push_back(PolyA::parse(*s.base, d, "t"));
  return out;
}

const ConstantExtension& extension_for(const Setup& s, const std::vector<PolyA>& polys) {
  std::vector<PolyA> primes;
  for (const auto& a : polys)
    for (const auto& p : squarefree_factors(a)) primes.push_back(p);
  return ConstantExtension::get(s.q, splitting_degree(primes));
}

std::vector<DirichletCharacter> characters_for(const ConstantExtension& cx, const PolyA& n, const SuiteOptions& opt,
                                               bool primitive_only) {
  if (opt.character) {
    DirichletCharacter chi = character_from_literal(cx, parse_character_literal(cx.base(), *opt.character, opt.var));
    if (chi.modulus() == n) return {chi};
    return {};
  }
  return characters_mod(cx, n, primitive_only);
}

std::vector<PolyA> hecke_primes(const FiniteField& base, unsigned max_degree) {
  std::vector<PolyA> out;
  for (const auto& a : monics_up_to_degree(base, max_degree))
    if (a.degree() >= 1 && is_irreducible(a)) out.push_back(a);
  return out;
}

std::vector<Job> eigen_jobs(const SuiteOptions& opt) {
  const Setup s = setup(opt, 3);
  const std::vector<PolyA> levels = moduli(s, opt, {"t", "t^2+1"});
  std::vector<PolyA> all = levels;
  const std::vector<PolyA> qs = hecke_primes(*s.base, 2);
  all.insert(all.end(), qs.begin(), qs.end());
  const ConstantExtension& cx = extension_for(s, all);
  const int D = opt.hecke_degree_bound.value_or(3);
  const std::size_t N = opt.precision.value_or(9);

  std::vector<Job> jobs;
  auto add = [&](FormSpec f, const PolyA* level) {
    for (const auto& q : qs) {
      if (level && level->divides(q)) continue;
      jobs.push_back([&cx, f, q, D, N] { return verify_eigensystem(cx, f, {q}, D, N).front(); });
    }
  };
  std::vector<int> svals = opt.s ? std::vector<int>{*opt.s} : std::vector<int>{1, 2, 3};
  for (int sv : svals) add(FormSpec{spec::PetrovFs{sv}}, nullptr);
  add(FormSpec{spec::Delta{}}, nullptr);
  std::vector<int> ks;
  if (opt.weight) ks.push_back(*opt.weight);
  else ks = {1, 2, 3};
  for (const auto& p : levels) {
    if (!is_irreducible(p)) continue;
    add(FormSpec{spec::EisensteinEp{p}}, &p);
    for (const auto& chi : characters_for(cx, p, opt, true))
      for (int k : ks) {
        if ((chi.sign() + static_cast<std::uint64_t>(k)) % (s.q - 1) != 0) continue;
        add(FormSpec{spec::FrickeEis{chi, k}}, &p);
        add(FormSpec{spec::TwistedEis{chi, k}}, &p);
      }
  }
  if (!opt.modulus && !opt.character) {
    // Twisted eigenforms through hecke_u at conductor t+1.
    const PolyA n = PolyA::parse(*s.base, "t+1", "t");
    const PolyA level = PolyA::parse(*s.base, "t^2+1", "t");
    const std::vector<FormSpec> bases = {FormSpec{spec::PetrovFs{1}}, FormSpec{spec::Delta{}},
                                         FormSpec{spec::EisensteinEp{level}}};
    for (const auto& chi : characters_mod(cx, n, true))
      for (const auto& f : bases)
        for (const auto& q : hecke_primes(*s.base, 1)) {
          if (q == n) continue;
          jobs.push_back([&cx, f, chi, q, D, N] {
            return verify_eigensystem(cx, normalized_twist_of(f, chi), {q}, D, N).front();
          });
        }
  }
  return jobs;
}

std::vector<Job> twist_commute_jobs(const SuiteOptions& opt) {
  const Setup s = setup(opt, 3);
  const PolyA n = moduli(s, opt, {"t+1"}).front();
  const std::vector<PolyA> qs = opt.modulus ? hecke_primes(*s.base, 1) : std::vector<PolyA>{PolyA::theta(*s.base)};
  std::vector<PolyA> all = qs;
  all.push_back(n);
  const ConstantExtension& cx = extension_for(s, all);
  const std::size_t N = opt.precision.value_or(9);
  std::vector<Job> jobs;
  for (const auto& chi : characters_for(cx, n, opt, true))
    for (const auto& q : qs) {
      if (!gcd(q, n).is_one()) continue;
      jobs.push_back([&cx, chi, q, N, s = opt.s.value_or(1)] {
        VerificationReport r;
        r.identity = "twist-commute";
        r.params = {{"q", std::to_string(cx.q())}, {"chi", chi.to_string()}, {"hecke_prime", q.to_string()},
                    {"form", "f_" + std::to_string(s)}};
        const UExpansion f = render(cx, FormSpec{spec::PetrovFs{s}}, N * q.abs());
        const UExpansion lhs = hecke_u(twist_raw(f, chi), q);
        const UExpansion rhs = twist_raw(hecke_u(f, q), chi).scaled(chi(q));
        r.precision = lhs.precision();
        r.witness = first_difference(lhs, rhs);
        r.pass = !r.witness;
        return r;
      });
    }
  return jobs;
}

std::vector<Job> convolution_jobs(const SuiteOptions& opt) {
  const Setup s = setup(opt, 3);
  std::vector<Job> jobs;
  for (const auto& n : moduli(s, opt, {"t", "t^2+1", "t^2+t"})) {
    const ConstantExtension& cx = extension_for(s, {n});
    jobs.push_back([&cx, n] {
      VerificationReport r;
      r.identity = "convolution";
      r.params = {{"q", std::to_string(cx.q())}, {"modulus", n.to_string()}};
      const auto chars = characters_mod(cx, n, true);
      const auto residues = polys_below_degree(cx.base(), static_cast<unsigned>(n.degree()));
      std::size_t checked = 0;
      for (const auto& a : chars) {
        for (const auto& b : chars) {
          const JacobiFactor jf = jacobi_factor(a, b);
          for (const auto& d : residues) {
            ++checked;
            const Fe got = convolve(a, b, d);
            const Fe want = cx.ext().mul(jf.factor, jf.product(d));
            if (got != want) {
              r.witness = a.to_string() + " * " + b.to_string() + " at " + d.to_string() + ": " +
                          cx.ext().to_string(got) + " != " + cx.ext().to_string(want);
              break;
            }
          }
          if (r.witness) break;
        }
        if (r.witness) break;
      }
      r.params.emplace_back("checked", std::to_string(checked));
      r.precision = residues.size();
      r.pass = !r.witness;
      return r;
    });
  }
  return jobs;
}

std::vector<Job> normproj_jobs(const SuiteOptions& opt) {
  std::vector<std::pair<std::uint32_t, std::string>> cases;
  if (opt.modulus || opt.q) cases.emplace_back(opt.q.value_or(3), opt.modulus.value_or("t"));
  else cases = {{3, "t"}, {5, "t^2+2"}};
  const std::size_t N = opt.precision.value_or(30);
  std::vector<Job> jobs;
  for (const auto& [q, text] : cases) {
    SuiteOptions o = opt;
    o.q = q;
    const Setup s = setup(o, q);
    const PolyA n = poly(s, text, o);
    const ConstantExtension& cx = extension_for(s, {n});
    const TorsionContext& ctx = TorsionContext::get(cx, n);
    for (const auto& chi : characters_for(cx, n, o, true)) {
      for (std::size_t i = 1; i <= 5; ++i) {
        jobs.push_back([&cx, &ctx, chi, i, N] {
          VerificationReport r;
          r.identity = "normproj-closed";
          r.params = {{"q", std::to_string(cx.q())}, {"chi", chi.to_string()}, {"i", std::to_string(i)}};
          r.precision = N;
          const ModularMeta meta{2, 1, PolyA::one(cx.base()), std::nullopt};
          const UExpansion u =
              UExpansion::monomial(cx, QuotientRing::scalars(cx.ext()), i, N).with_meta(meta);
          r.witness = first_difference(twist_normalized(u, chi, ctx), twist_monomial_closed(i, chi, ctx, N));
          r.pass = !r.witness;
          return r;
        });
      }
      jobs.push_back([&cx, &ctx, chi, N] {
        VerificationReport r;
        r.identity = "normproj-integral";
        r.params = {{"q", std::to_string(cx.q())}, {"chi", chi.to_string()}, {"form", "f_1"}};
        r.precision = N;
        const UExpansion t = twist_normalized(render(cx, FormSpec{spec::PetrovFs{1}}, N), chi, ctx);
        for (std::size_t k = 0; k < t.precision() && !r.witness; ++k)
          if (!t[k].is_scalar() || !t[k].is_integral())
            r.witness = "u^" + std::to_string(k) + ": " + t[k].to_string();
        r.pass = !r.witness;
        return r;
      });
    }
  }
  return jobs;
}

std::vector<Job> congruence_jobs(const SuiteOptions& opt) {
  const Setup s = setup(opt, 3);
  const PolyA p = moduli(s, opt, {"t^2+1"}).front();
  const ConstantExtension& cx = extension_for(s, {p});
  const int sv = opt.s.value_or(1);
  const std::size_t N = opt.precision.value_or(30);
  std::vector<Job> jobs;
  for (auto kind : {CongruenceKind::SF, CongruenceKind::TwistedSF})
    jobs.push_back([&cx, kind, p, sv, N] { return congruence_check(cx, kind, p, sv, N); });
  return jobs;
}

std::vector<Job> rank_jobs(const SuiteOptions& opt) {
  const Setup s = setup(opt, 3);
  std::vector<Job> jobs;
  for (const auto& p : moduli(s, opt, {"t^2+1", "t"})) {
    const ConstantExtension& cx = extension_for(s, {p});
    std::vector<int> ks;
    if (opt.weight) ks.push_back(*opt.weight);
    else ks = {1, 2, 3};
    const std::size_t N = opt.precision.value_or(4 * p.abs());
    for (int k : ks)
      jobs.push_back([&cx, p, k, N] {
        VerificationReport r;
        r.identity = "eisenstein-rank";
        const std::size_t expected = 2 * (p.abs() - 1) / (cx.q() - 1);
        const std::size_t got = eisenstein_rank(cx, p, k, N);
        r.params = {{"q", std::to_string(cx.q())}, {"p", p.to_string()}, {"k", std::to_string(k)},
                    {"rank", std::to_string(got)}, {"expected", std::to_string(expected)}};
        r.precision = N;
        if (got != expected) r.witness = "rank " + std::to_string(got) + " != " + std::to_string(expected);
        r.pass = !r.witness;
        return r;
      });
  }
  return jobs;
}

std::vector<Job> table_jobs(const SuiteOptions& opt) {
  const Setup s = setup(opt, 5);
  const PolyA n = moduli(s, opt, {"t^2+2"}).front();
  const bool reference = s.q == 5 && n == PolyA::parse(*s.base, "t^2+2", "t");
  return {[s, n, reference] {
    VerificationReport r;
    r.identity = "table";
    r.params = {{"q", std::to_string(s.q)}, {"modulus", n.to_string()}, {"range", "23"}};
    r.precision = 23;
    const auto got = table_pairs(s.q, n, 23);
    r.params.emplace_back("pairs", std::to_string(got.size()));
    if (reference) {
      const std::set<TablePair> a(got.begin(), got.end());
      const std::set<TablePair> b(golden_table().begin(), golden_table().end());
      for (const auto& x : a)
        if (!b.count(x)) {
          r.witness = "unexpected [" + std::to_string(x.first) + ", " + std::to_string(x.second) + "]";
          break;
        }
      if (!r.witness)
        for (const auto& x : b)
          if (!a.count(x)) {
            r.witness = "missing [" + std::to_string(x.first) + ", " + std::to_string(x.second) + "]";
            break;
          }
    }
    r.pass = !r.witness;
    return r;
  }};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"eigen",      "twist-commute", "convolution", "normproj",
                                                 "congruence", "rank",          "table"};
  return names;
}

std::vector<VerificationReport> run_suite(std::string_view name, const SuiteOptions& opt) {
  static const std::map<std::string, std::vector<Job> (*)(const SuiteOptions&), std::less<>> suites = {
      {"eigen", eigen_jobs},     {"twist-commute", twist_commute_jobs},
      {"convolution", convolution_jobs}, {"normproj", normproj_jobs},
      {"congruence", congruence_jobs},   {"rank", rank_jobs},
      {"table", table_jobs},
  };
  auto it = suites.find(name);
  if (it == suites.end()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  return run_parallel(it->second(opt));
}

}  // namespace drinfeld
