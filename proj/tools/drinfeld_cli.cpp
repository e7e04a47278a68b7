#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/forms.hpp"
#include "drinfeld/operators.hpp"
#include "drinfeld/suites.hpp"

using namespace drinfeld;

namespace {

struct Config {
  std::uint32_t q = 3;
  std::string var = "t";
  std::size_t precision = 30;
  std::string format = "text";
  std::string suite;
  std::string modulus;
  std::string character;
  std::string form = "fs";
  std::string prime = "t";
  int weight = 1;
  int type = 0;
  int s = 1;
  int range = 23;
  int hecke_degree_bound = -1;
};

// Ring dimension times coefficient count, in RingElem units.
constexpr std::size_t kMemoryWarnThreshold = 2'000'000;

const FiniteField& base_field(std::uint32_t q) {
  const auto [p, e] = prime_power(q);
  if (e != 1) throw InvalidArgument("polynomial literals need a prime q");
  return FiniteField::get(p, 1);
}

const ConstantExtension& extension_for(std::uint32_t q, const std::vector<PolyA>& polys) {
  std::vector<PolyA> primes;
  for (const auto& a : polys)
    for (const auto& p : squarefree_factors(a)) primes.push_back(p);
  return ConstantExtension::get(q, splitting_degree(primes));
}

DirichletCharacter parse_char(const ConstantExtension& cx, const Config& c) {
  if (c.character.empty()) throw InvalidArgument("--char is required");
  return character_from_literal(cx, parse_character_literal(cx.base(), c.character, c.var));
}

// Polynomials whose primes the constant field must split.
std::vector<PolyA> needed_primes(const Config& c) {
  const FiniteField& base = base_field(c.q);
  std::vector<PolyA> out = {PolyA::theta(base)};
  if (!c.modulus.empty()) out.push_back(PolyA::parse(base, c.modulus, c.var));
  if (!c.character.empty())
    for (const auto& p : parse_character_literal(base, c.character, c.var).primes) out.push_back(p);
  if (!c.prime.empty()) out.push_back(PolyA::parse(base, c.prime, c.var));
  return out;
}

FormSpec form_from(const ConstantExtension& cx, const Config& c) {
  if (c.form == "fs") return FormSpec{spec::PetrovFs{c.s}};
  if (c.form == "delta") return FormSpec{spec::Delta{}};
  if (c.form == "E") return FormSpec{spec::FalseEisenstein{}};
  if (c.form == "Ep") {
    if (c.modulus.empty()) throw InvalidArgument("--form Ep needs --modulus");
    return FormSpec{spec::EisensteinEp{PolyA::parse(cx.base(), c.modulus, c.var)}};
  }
  if (c.form == "ehat") return FormSpec{spec::FrickeEis{parse_char(cx, c), c.weight}};
  if (c.form == "etilde") return FormSpec{spec::TwistedEis{parse_char(cx, c), c.weight}};
  throw InvalidArgument("unknown form '" + c.form + "'");
}

std::vector<std::string> generator_names(const QuotientRing& ring, const Config& c) {
  std::vector<std::string> names;
  for (const auto& p : carlitz_primes(ring)) names.push_back("L[" + p.to_string(c.var) + "]");
  return names;
}

void print_series(const UExpansion& f, const std::string& label, const Config& c) {
  const auto names = generator_names(f.ring(), c);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["form"] = label;
    j["q"] = c.q;
    j["precision"] = f.precision();
    j["ring"] = f.ring().describe();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < f.precision(); ++n) coeffs.push_back(f[n].to_string(c.var, names));
    j["coefficients"] = coeffs;
    std::cout << j.dump() << "\n";
  } else if (c.format == "csv") {
    std::cout << "n,coefficient\n";
    for (std::size_t n = 0; n < f.precision(); ++n) {
      if (f[n].is_zero()) continue;
      std::string v = f[n].to_string(c.var, names);
      if (v.find(',') != std::string::npos) v = "\"" + v + "\"";
      std::cout << n << "," << v << "\n";
    }
  } else {
    std::cout << label << " = " << f.to_string(c.var, names) << "\n";
  }
}

void warn_memory(std::size_t coefficients, const QuotientRing& ring) {
  if (coefficients * ring.dim() > kMemoryWarnThreshold)
    std::cerr << "warning: about " << coefficients * ring.dim()
              << " ring coefficients will be held in memory; this may be slow\n";
}

int cmd_table(Config c, const CLI::App& sub) {
  if (!sub.count("--q")) c.q = 5;
  const FiniteField& base = base_field(c.q);
  const PolyA n = PolyA::parse(base, c.modulus.empty() ? "t^2+2" : c.modulus, c.modulus.empty() ? "t" : c.var);
  const auto pairs = table_pairs(c.q, n, c.range);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["q"] = c.q;
    j["modulus"] = n.to_string(c.var);
    j["range"] = c.range;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [jj, ii] : pairs) arr.push_back({jj, ii});
    j["pairs"] = arr;
    std::cout << j.dump() << "\n";
  } else if (c.format == "csv") {
    std::cout << "j,i\n";
    for (const auto& [jj, ii] : pairs) std::cout << jj << "," << ii << "\n";
  } else {
    std::cout << format_table(pairs);
  }
  return 0;
}

int cmd_verify(const Config& c, const CLI::App& sub) {
  SuiteOptions o;
  if (sub.count("--q")) o.q = c.q;
  o.var = c.var;
  if (!c.modulus.empty()) o.modulus = c.modulus;
  if (!c.character.empty()) o.character = c.character;
  if (sub.count("--weight")) o.weight = c.weight;
  if (sub.count("--type")) o.type = c.type;
  if (sub.count("--s")) o.s = c.s;
  if (sub.count("--precision")) o.precision = c.precision;
  if (c.hecke_degree_bound >= 0) o.hecke_degree_bound = c.hecke_degree_bound;
  const auto reports = run_suite(c.suite, o);
  bool ok = true;
  if (c.format == "csv") std::cout << csv_header() << "\n";
  for (const auto& r : reports) {
    ok = ok && r.pass;
    if (c.format == "json") std::cout << r.to_json() << "\n";
    else if (c.format == "csv") std::cout << r.to_csv() << "\n";
    else std::cout << r.to_text() << "\n";
  }
  if (c.format == "text")
    std::cout << (ok ? "all " : "some ") << reports.size() << " checks " << (ok ? "passed" : "failed") << "\n";
  return ok ? 0 : 1;
}

int cmd_expand(const Config& c) {
  const ConstantExtension& cx = extension_for(c.q, needed_primes(c));
  const FormSpec f = form_from(cx, c);
  print_series(render(cx, f, c.precision), f.name(c.var), c);
  return 0;
}

int cmd_twist(const Config& c, bool raw) {
  const ConstantExtension& cx = extension_for(c.q, needed_primes(c));
  const FormSpec f = form_from(cx, c);
  const DirichletCharacter chi = parse_char(cx, c);
  const FormSpec t = raw ? raw_twist_of(f, chi) : normalized_twist_of(f, chi);
  print_series(render(cx, t, c.precision), t.name(c.var), c);
  return 0;
}

int cmd_hecke(const Config& c) {
  const ConstantExtension& cx = extension_for(c.q, needed_primes(c));
  const FormSpec f = form_from(cx, c);
  const PolyA q = PolyA::parse(cx.base(), c.prime, c.var);
  const std::size_t N_in = c.precision * q.abs();
  std::cerr << "note: rendering input to precision " << N_in << " = N |q|\n";
  const UExpansion g = render(cx, f, N_in);
  warn_memory(N_in, g.ring());
  const UExpansion h = hecke_u(g, q);
  print_series(h, "T_" + q.to_string(c.var) + " " + f.name(c.var), c);
  if (c.format == "text") {
    const RatFunc lambda = expected_eigenvalue(cx, f, q);
    const bool eigen = h == g.truncated(h.precision()).scaled(lambda);
    std::cout << "eigenvalue " << lambda.to_string(c.var) << ": " << (eigen ? "confirmed" : "not confirmed") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld modular forms: u-expansions, twists and Hecke operators"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--q", c.q, "size of the constant field (prime)");
    s->add_option("--var", c.var, "symbol for theta in polynomial literals");
    s->add_option("--precision", c.precision, "u-adic precision N");
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    s->add_option("--modulus", c.modulus, "modulus, level or conductor, e.g. t^2+1");
    s->add_option("--char", c.character, "character literal, e.g. chi{p=t^2+1; zeta=auto; e=3}");
    s->add_option("--weight", c.weight, "weight k");
    s->add_option("--type", c.type, "type m");
    s->add_option("--s", c.s, "index s of f_s");
    s->add_option("--hecke-degree-bound", c.hecke_degree_bound, "degree bound for A-expansion Hecke checks");
  };

  auto* table = app.add_subcommand("table", "nonvanishing pairs of the character sums");
  common(table);
  table->add_option("--range", c.range, "largest i and j");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", c.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  auto* expand = app.add_subcommand("expand", "print a u-expansion");
  common(expand);
  expand->add_option("--form", c.form, "fs, delta, E, Ep, ehat or etilde");
  auto* twist = app.add_subcommand("twist", "print the twist of a form by a character");
  common(twist);
  twist->add_option("--form", c.form, "fs, delta, E, Ep, ehat or etilde");
  bool raw = false;
  twist->add_flag("--raw", raw, "skip the Gauss sum normalization");
  auto* hecke = app.add_subcommand("hecke", "apply a Hecke operator to a rendered form");
  common(hecke);
  hecke->add_option("--form", c.form, "fs, delta, E, Ep, ehat or etilde");
  hecke->add_option("--prime", c.prime, "Hecke prime");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*table) return cmd_table(c, *table);
    if (*verify) return cmd_verify(c, *verify);
    if (*expand) return cmd_expand(c);
    if (*twist) return cmd_twist(c, raw);
    if (*hecke) return cmd_hecke(c);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
