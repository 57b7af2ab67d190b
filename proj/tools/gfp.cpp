// gfp: generate generalized Fibonacci polynomials, compute their resultants,
// discriminants and derivatives, and run the oracle verification sweeps.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gfp/closed_forms.hpp"
#include "gfp/errors.hpp"
#include "gfp/family.hpp"
#include "gfp/identities.hpp"
#include "gfp/sylvester.hpp"
#include "gfp/tables.hpp"
#include "gfp/verify.hpp"

namespace {

using gfp::GfpFamily;
using gfp::Kind;
using gfp::Polynomial;
using gfp::Rational;
using json = nlohmann::json;

enum ExitCode { kPass = 0, kFailure = 1, kUsage = 2, kMismatch = 3 };

enum class Format { Human, Csv, Json };
enum class Method { Sylvester, Closed, Both };

struct Globals {
  Format format = Format::Human;
  unsigned jobs = 1;
};

/// A family named on the command line. partner_p0 only matters for
/// Fibonacci-type customs, whose conjugate is otherwise unknown.
struct FamilyArg {
  GfpFamily family;
  std::optional<int> partner_p0;
};

int parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw gfp::ParseError("bad integer for " + key + ": '" + text + "'");
}

// fibonacci-type:d=<poly>,g=<poly>[,partner-p0=<int>]
// lucas-type:d=<poly>,g=<poly>,p0=<int>[,p1=<poly>]
FamilyArg parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {gfp::builtin_family(spec), std::nullopt};

  const std::string kind_text = spec.substr(0, colon);
  Kind kind;
  if (kind_text == "fibonacci-type") {
    kind = Kind::FibonacciType;
  } else if (kind_text == "lucas-type") {
    kind = Kind::LucasType;
  } else {
    throw gfp::ParseError("custom family must start with fibonacci-type: or lucas-type:, got '" + kind_text + "'");
  }

  std::map<std::string, std::string> fields;
  std::istringstream in(spec.substr(colon + 1));
  for (std::string item; std::getline(in, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw gfp::ParseError("expected key=value in family spec, got '" + item + "'");
    fields[item.substr(0, eq)] = item.substr(eq + 1);
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = fields.find(key);
    if (it == fields.end()) return std::nullopt;
    std::string v = it->second;
    fields.erase(it);
    return v;
  };
  const auto d = take("d");
  const auto g = take("g");
  if (!d || !g) throw gfp::ParseError("family spec needs both d= and g=");
  const Polynomial dp = Polynomial::parse(*d);
  const Polynomial gp = Polynomial::parse(*g);

  FamilyArg out{gfp::builtin_family("fibonacci"), std::nullopt};
  if (kind == Kind::FibonacciType) {
    if (auto partner = take("partner-p0")) out.partner_p0 = parse_int("partner-p0", *partner);
    out.family = gfp::custom_family(kind, dp, gp, 0, Polynomial::constant(1), spec);
  } else {
    const auto p0_text = take("p0");
    if (!p0_text) throw gfp::ParseError("lucas-type family spec needs p0=");
    const int p0 = parse_int("p0", *p0_text);
    const auto p1_text = take("p1");
    // Default p1 = d / alpha = p0 d / 2.
    const Polynomial p1 = p1_text ? Polynomial::parse(*p1_text) : Rational(p0, 2) * dp;
    out.family = gfp::custom_family(kind, dp, gp, p0, p1, spec);
  }
  if (!fields.empty()) throw gfp::ParseError("unknown key '" + fields.begin()->first + "' in family spec");
  return out;
}

gfp::ConjugatePair pair_of(const FamilyArg& arg) {
  return gfp::make_conjugate_pair(arg.family, gfp::conjugate_of(arg.family, arg.partner_p0));
}

void print_value(const Globals& g, const std::string& label, const std::string& value, json extra = json::object()) {
  switch (g.format) {
    case Format::Human: std::cout << value << "\n"; break;
    case Format::Csv: std::cout << label << "\n" << value << "\n"; break;
    case Format::Json:
      extra["value"] = value;
      std::cout << extra.dump() << "\n";
      break;
  }
}

long require_index(long n, long lo, const char* what) {
  if (n < lo) throw gfp::PreconditionError(std::string(what) + " must be >= " + std::to_string(lo));
  return n;
}

int cmd_gen(const Globals& g, const std::string& family, long n) {
  const FamilyArg f = parse_family(family);
  require_index(n, 0, "n");
  const Polynomial p = f.family.generate(static_cast<std::size_t>(n));
  if (g.format == Format::Csv) {
    std::cout << "family,n,value\n" << f.family.name() << "," << n << "," << p.to_string() << "\n";
  } else {
    print_value(g, "value", p.to_string(), {{"family", f.family.name()}, {"n", n}});
  }
  return kPass;
}

/// Closed-form value of Res(A_m, B_n) when a theorem covers the pair.
std::optional<Rational> closed_resultant(const FamilyArg& a, long m, const FamilyArg& b, long n) {
  if (a.family == b.family) {
    return a.family.is_fibonacci_type() ? gfp::res_ff_closed(a.family, m, n).value
                                        : gfp::res_ll_closed(a.family, m, n).value;
  }
  if (a.family.kind() == b.family.kind()) return std::nullopt;
  const FamilyArg& lucas = a.family.is_lucas_type() ? a : b;
  const FamilyArg& fib = a.family.is_lucas_type() ? b : a;
  try {
    gfp::make_conjugate_pair(lucas.family, fib.family);
  } catch (const gfp::NotConjugate&) {
    return std::nullopt;
  }
  if (a.family.is_lucas_type()) return gfp::res_lf_closed(lucas.family, fib.family, m, n).value;
  // Res(F_m, L_n) = (-1)^(deg F_m deg L_n) Res(L_n, F_m).
  const Rational swapped = gfp::res_lf_closed(lucas.family, fib.family, n, m).value;
  const std::size_t dm = a.family.generate(m).degree().value_or(0);
  const std::size_t dn = b.family.generate(n).degree().value_or(0);
  return (dm * dn) % 2 == 0 ? swapped : -swapped;
}

int report_pair(const Globals& g, Method method, const std::optional<Rational>& oracle,
                const std::optional<Rational>& closed, json meta) {
  if (method == Method::Sylvester) {
    print_value(g, "sylvester", oracle->to_string(), std::move(meta));
    return kPass;
  }
  if (method == Method::Closed) {
    print_value(g, "closed", closed->to_string(), std::move(meta));
    return kPass;
  }
  const bool match = *oracle == *closed;
  const std::string verdict = match ? "MATCH" : "MISMATCH";
  switch (g.format) {
    case Format::Human:
      std::cout << oracle->to_string() << " " << closed->to_string() << " " << verdict << "\n";
      break;
    case Format::Csv:
      std::cout << "sylvester,closed,verdict\n"
                << oracle->to_string() << "," << closed->to_string() << "," << verdict << "\n";
      break;
    case Format::Json:
      meta["sylvester"] = oracle->to_string();
      meta["closed"] = closed->to_string();
      meta["verdict"] = verdict;
      std::cout << meta.dump() << "\n";
      break;
  }
  return match ? kPass : kMismatch;
}

int cmd_res(const Globals& g, const std::string& f1, long m, const std::string& f2, long n, Method method) {
  const FamilyArg a = parse_family(f1);
  const FamilyArg b = parse_family(f2);
  require_index(m, 1, "first index");
  require_index(n, 1, "second index");
  std::optional<Rational> closed;
  if (method != Method::Sylvester) {
    closed = closed_resultant(a, m, b, n);
    if (!closed) {
      throw gfp::PreconditionError("no closed form for Res(" + a.family.name() + ", " + b.family.name() +
                                   "): families must be equal or a conjugate pair (use --method sylvester)");
    }
  }
  std::optional<Rational> oracle;
  if (method != Method::Closed) oracle = gfp::resultant(a.family.generate(m), b.family.generate(n));
  return report_pair(g, method, oracle, closed,
                     {{"first", a.family.name()}, {"m", m}, {"second", b.family.name()}, {"n", n}});
}

int cmd_disc(const Globals& g, const std::string& family, long n, Method method) {
  const FamilyArg f = parse_family(family);
  require_index(n, 1, "n");
  std::optional<Rational> closed;
  if (method != Method::Sylvester) {
    closed = f.family.is_fibonacci_type() ? gfp::disc_f_closed(f.family, n) : gfp::disc_l_closed(f.family, n);
  }
  std::optional<Rational> oracle;
  if (method != Method::Closed) oracle = gfp::discriminant(f.family.generate(n));
  return report_pair(g, method, oracle, closed, {{"family", f.family.name()}, {"n", n}});
}

int cmd_deriv(const Globals& g, const std::string& family, long n, const std::optional<std::string>& at) {
  const FamilyArg f = parse_family(family);
  require_index(n, 0, "n");
  const Polynomial formal = f.family.generate(n).derivative();
  Polynomial result = formal;
  if (!f.family.g().is_constant()) {
    std::cerr << "notice: closed-form derivative needs constant g; showing the formal derivative\n";
  } else if (n >= 1) {
    std::optional<gfp::ConjugatePair> pair;
    try {
      pair = pair_of(f);
    } catch (const gfp::NoConjugate& e) {
      std::cerr << "notice: " << e.what() << "; showing the formal derivative\n";
    }
    if (pair) {
      result = f.family.is_fibonacci_type() ? gfp::deriv_f_closed(*pair, n) : gfp::deriv_l_closed(*pair, n);
      if (result != formal) {
        std::cerr << "closed derivative " << result << " does not match formal derivative " << formal << "\n";
        return kMismatch;
      }
    }
  }
  json meta = {{"family", f.family.name()}, {"n", n}};
  if (at) {
    const Rational point = Rational::parse(*at);
    meta["at"] = point.to_string();
    print_value(g, "value", result.evaluate(point).to_string(), std::move(meta));
  } else {
    print_value(g, "value", result.to_string(), std::move(meta));
  }
  return kPass;
}

long capped_max_n(long max_n) {
  if (const char* env = std::getenv("GFP_MAX_N")) {
    const long cap = parse_int("GFP_MAX_N", env);
    if (cap < max_n) {
      std::cerr << "notice: max-n capped at " << cap << " by GFP_MAX_N\n";
      max_n = cap;
    }
  }
  return max_n;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    // Custom family specs contain commas of their own.
    if (item.find(':') != std::string::npos) {
      out.push_back(item);
      continue;
    }
    std::istringstream in(item);
    for (std::string part; std::getline(in, part, ',');) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

int cmd_verify(const Globals& g, long max_n, const std::vector<std::string>& families,
               const std::vector<std::string>& identities) {
  gfp::SweepConfig config;
  config.max_n = capped_max_n(max_n);
  if (config.max_n < 2) throw gfp::PreconditionError("verify needs --max-n >= 2");
  config.jobs = g.jobs;
  for (const auto& spec : split_list(families)) {
    const FamilyArg arg = parse_family(spec);
    config.families.push_back(arg.family);
    if (arg.partner_p0) config.families.push_back(gfp::conjugate_of(arg.family, arg.partner_p0));
  }
  const auto ids = gfp::resolve_identities(split_list(identities));

  std::size_t failed = 0;
  if (g.format == Format::Csv) std::cout << "identity,passed,cases,failures\n";
  for (const auto& id : ids) {
    const gfp::VerificationReport r = gfp::run_identity(id, config);
    if (!r.passed()) ++failed;
    switch (g.format) {
      case Format::Json: std::cout << gfp::to_json(r).dump() << "\n"; break;
      case Format::Csv:
        std::cout << r.identity << "," << (r.passed() ? "true" : "false") << "," << r.cases << ","
                  << r.failures.size() << "\n";
        break;
      case Format::Human: {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.identity << " (" << r.cases << " cases)\n";
        for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
        const std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) {
          const auto& f = r.failures[i];
          std::cout << "  counterexample:";
          for (const auto& p : f.params) {
            std::cout << " " << p.name << "=";
            std::visit([](const auto& v) { std::cout << v; }, p.value);
          }
          std::cout << " expected " << gfp::to_string(f.expected) << " got " << gfp::to_string(f.got) << "\n";
        }
        if (r.failures.size() > shown) std::cout << "  ... " << r.failures.size() - shown << " more\n";
        break;
      }
    }
  }
  if (g.format == Format::Human) {
    std::cout << (failed == 0 ? std::string("all identities pass")
                              : std::to_string(failed) + " of " + std::to_string(ids.size()) + " identities FAILED")
              << "\n";
  }
  return failed == 0 ? kPass : kFailure;
}

int cmd_tables(const Globals& g, int number, long max_n) {
  const gfp::Table t = gfp::build_table(number, capped_max_n(max_n));
  switch (g.format) {
    case Format::Human: std::cout << gfp::render_human(t); break;
    case Format::Csv: std::cout << gfp::render_csv(t); break;
    case Format::Json: std::cout << gfp::to_json(t).dump(2) << "\n"; break;
  }
  if (t.mismatches() != 0) {
    std::cerr << t.mismatches() << " table cells differ from the oracle\n";
    return kMismatch;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Fibonacci polynomials: closed-form resultants, discriminants and derivatives"};
  app.require_subcommand(1);

  Globals globals;
  const std::map<std::string, Format> formats{{"human", Format::Human}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", globals.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("human|csv|json");
  app.add_option("--jobs", globals.jobs, "Worker threads for verify")->check(CLI::Range(1U, 1024U));
  app.fallthrough();

  const std::map<std::string, Method> methods{
      {"sylvester", Method::Sylvester}, {"closed", Method::Closed}, {"both", Method::Both}};
  std::string fam1, fam2;
  long idx1 = 0, idx2 = 0;
  Method method = Method::Both;
  std::optional<std::string> at;
  long max_n = 12;
  long table_max_n = 6;
  int table_number = 0;
  std::vector<std::string> families, identities;

  auto* gen = app.add_subcommand("gen", "Print G_n");
  gen->add_option("family", fam1, "Family name or custom spec")->required();
  gen->add_option("n", idx1)->required();

  auto* res = app.add_subcommand("res", "Resultant of two members");
  res->add_option("family1", fam1)->required();
  res->add_option("m", idx1)->required();
  res->add_option("family2", fam2)->required();
  res->add_option("n", idx2)->required();
  res->add_option("--method", method)->transform(CLI::CheckedTransformer(methods))->option_text("sylvester|closed|both");

  auto* disc = app.add_subcommand("disc", "Discriminant of G_n");
  disc->add_option("family", fam1)->required();
  disc->add_option("n", idx1)->required();
  disc->add_option("--method", method)->transform(CLI::CheckedTransformer(methods))->option_text("sylvester|closed|both");

  auto* deriv = app.add_subcommand("deriv", "Derivative of G_n");
  deriv->add_option("family", fam1)->required();
  deriv->add_option("n", idx1)->required();
  deriv->add_option("--at", at, "Evaluate at this rational point");

  auto* verify = app.add_subcommand("verify", "Run the identity sweeps against the oracle");
  verify->add_option("--max-n", max_n, "Largest index in every grid");
  verify->add_option("--families", families, "Families to sweep (default: all built-ins)");
  verify->add_option("--identities", identities, "Identity ids or aliases (default: all)");

  auto* tables = app.add_subcommand("tables", "Print an oracle-checked table of closed forms");
  tables->add_option("table", table_number, "2 to 6")->required()->check(CLI::Range(2, 6));
  tables->add_option("--max-n", table_max_n, "Largest index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) return cmd_gen(globals, fam1, idx1);
    if (*res) return cmd_res(globals, fam1, idx1, fam2, idx2, method);
    if (*disc) return cmd_disc(globals, fam1, idx1, method);
    if (*deriv) return cmd_deriv(globals, fam1, idx1, at);
    if (*verify) return cmd_verify(globals, max_n, families, identities);
    if (*tables) return cmd_tables(globals, table_number, table_max_n);
  } catch (const gfp::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  } catch (const gfp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
