#include "gfp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <utility>

#include "gfp/closed_forms.hpp"
#include "gfp/errors.hpp"
#include "gfp/sylvester.hpp"

namespace gfp {

namespace {

using Task = std::function<VerificationReport()>;

struct Plan {
  std::vector<GridAxis> grid;
  std::vector<Task> tasks;
  std::vector<std::string> notes;
};

std::vector<GfpFamily> families_of(const SweepConfig& config) {
  if (!config.families.empty()) return config.families;
  std::vector<GfpFamily> out;
  for (const auto& name : builtin_family_names()) out.push_back(builtin_family(name));
  return out;
}

std::vector<GfpFamily> of_kind(const SweepConfig& config, Kind kind) {
  std::vector<GfpFamily> out;
  for (auto& f : families_of(config)) {
    if (f.kind() == kind) out.push_back(std::move(f));
  }
  return out;
}

/// Conjugate pairs touched by the configured families, one per Lucas
/// member. Fibonacci-type customs without a known partner are noted and
/// skipped.
std::vector<ConjugatePair> pairs_of(const SweepConfig& config, std::vector<std::string>& notes) {
  std::vector<ConjugatePair> out;
  auto seen = [&](const ConjugatePair& p) {
    return std::any_of(out.begin(), out.end(), [&](const ConjugatePair& q) {
      return q.lucas == p.lucas && q.lucas.name() == p.lucas.name();
    });
  };
  auto families = families_of(config);
  // Lucas-type first, so a Fibonacci-type family already paired is not
  // reported as lacking a conjugate.
  std::stable_partition(families.begin(), families.end(), [](const GfpFamily& f) { return f.is_lucas_type(); });
  for (const auto& f : families) {
    if (f.is_fibonacci_type() &&
        std::any_of(out.begin(), out.end(), [&](const ConjugatePair& p) { return p.fibonacci == f; })) {
      continue;
    }
    try {
      ConjugatePair pair = conjugate_pair_of(f);
      if (!seen(pair)) out.push_back(std::move(pair));
    } catch (const NoConjugate& e) {
      notes.push_back("skipped " + f.name() + ": " + e.what());
    }
  }
  return out;
}

long decomposition_bound(const SweepConfig& c) { return std::min(c.max_n, c.decomposition_bound); }

void add_family_grid(Plan& plan, const std::vector<GfpFamily>& families, long lo, long hi,
                     std::function<VerificationReport(const GfpFamily&, long)> check) {
  for (const auto& f : families) {
    for (long n = lo; n <= hi; ++n) plan.tasks.push_back([f, n, check] { return check(f, n); });
  }
}

void add_family_grid2(Plan& plan, const std::vector<GfpFamily>& families, long lo, long hi,
                      std::function<VerificationReport(const GfpFamily&, long, long)> check) {
  for (const auto& f : families) {
    for (long a = lo; a <= hi; ++a) {
      for (long b = lo; b <= hi; ++b) plan.tasks.push_back([f, a, b, check] { return check(f, a, b); });
    }
  }
}

void add_pair_grid2(Plan& plan, const std::vector<ConjugatePair>& pairs, long lo, long hi,
                    std::function<VerificationReport(const ConjugatePair&, long, long)> check) {
  for (const auto& p : pairs) {
    for (long a = lo; a <= hi; ++a) {
      for (long b = lo; b <= hi; ++b) plan.tasks.push_back([p, a, b, check] { return check(p, a, b); });
    }
  }
}

/// Families meeting `pred`; the rest are noted as skipped.
std::vector<GfpFamily> qualifying(const std::vector<GfpFamily>& families, Plan& plan,
                                  const std::function<bool(const GfpFamily&)>& pred, const std::string& why) {
  std::vector<GfpFamily> out;
  for (const auto& f : families) {
    if (pred(f)) {
      out.push_back(f);
    } else {
      plan.notes.push_back("skipped " + f.name() + ": " + why);
    }
  }
  return out;
}

Plan plan_for(const std::string& id, const SweepConfig& config) {
  Plan plan;
  const long N = config.max_n;
  const long B = decomposition_bound(config);
  const auto fib = of_kind(config, Kind::FibonacciType);
  const auto luc = of_kind(config, Kind::LucasType);
  const auto all = families_of(config);
  const auto constant_g = [](const GfpFamily& f) { return f.g().is_constant(); };

  if (id == "res-fib-fib") {
    plan.grid = {{"n", 1, N}, {"m", 1, N}};
    add_family_grid2(plan, fib, 1, N, check_res_ff);
  } else if (id == "res-luc-luc") {
    plan.grid = {{"m", 1, N}, {"n", 1, N}};
    add_family_grid2(plan, luc, 1, N, check_res_ll);
  } else if (id == "res-luc-fib") {
    plan.grid = {{"n", 1, N}, {"m", 1, N}};
    add_pair_grid2(plan, pairs_of(config, plan.notes), 1, N, check_res_lf);
  } else if (id == "disc-fib" || id == "disc-luc") {
    const bool is_fib = id == "disc-fib";
    const long lo = is_fib ? 2 : 1;
    plan.grid = {{"n", lo, N}};
    auto fams = qualifying(is_fib ? fib : luc, plan, discriminant_formula_applies, "needs deg(d) = 1 and constant g");
    if (is_fib) {
      add_family_grid(plan, fams, lo, N, check_disc_f);
    } else {
      add_family_grid(plan, fams, lo, N, check_disc_l);
    }
  } else if (id == "derivatives") {
    plan.grid = {{"n", 1, N}};
    for (const auto& p : pairs_of(config, plan.notes)) {
      if (!p.lucas.g().is_constant()) {
        plan.notes.push_back("skipped " + p.lucas.name() + ": needs constant g");
        continue;
      }
      for (long n = 1; n <= N; ++n) plan.tasks.push_back([p, n] { return check_derivatives(p, n); });
    }
  } else if (id == "deriv-sequences") {
    plan.grid = {{"n", 1, 6}};
    plan.tasks.push_back([] { return check_derivative_sequences(); });
  } else if (id == "resultant-axioms") {
    plan.grid = {{"triples", 1, static_cast<long>(config.random_triples)}, {"degree", 0, 6}, {"coefficient", -9, 9}};
    RandomPolynomials rng(config.seed);
    for (std::size_t i = 0; i < config.random_triples; ++i) {
      Polynomial f, h;
      // Every other triple shares a random linear factor so the vanishing
      // law sees both outcomes.
      if (i % 2 == 1) {
        const Polynomial common = rng.next(1, 1);
        f = rng.next(0, 5) * common;
        h = rng.next(0, 5) * common;
      } else {
        f = rng.next(0, 6);
        h = rng.next(0, 6);
      }
      const Polynomial p = rng.next(0, 6);
      const unsigned power = rng.uniform(1, 3);
      plan.tasks.push_back([f, h, p, power] { return check_resultant_axioms(f, h, p, power); });
    }
  } else if (id == "product-discriminant") {
    plan.grid = {{"pairs", 1, static_cast<long>(config.random_pairs)}, {"degree", 1, 4}, {"coefficient", -9, 9}};
    RandomPolynomials rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < config.random_pairs; ++i) {
      Polynomial p, q;
      do {
        p = rng.next(1, 4);
        q = rng.next(1, 4);
      } while (resultant(p, q).is_zero());
      plan.tasks.push_back([p, q] { return check_product_discriminant(p, q); });
    }
  } else if (id == "degree-law") {
    plan.grid = {{"n", 1, N}};
    add_family_grid(plan, all, 1, N, check_degree_law);
  } else if (id == "conjugate-constants") {
    for (const auto& p : pairs_of(config, plan.notes)) {
      plan.tasks.push_back([p] {
        VerificationReport r;
        r.identity = "conjugate-constants";
        r.families = {p.lucas.name(), p.fibonacci.name()};
        const FamilyConstants a = family_constants(p.lucas);
        const FamilyConstants b = family_constants(p.fibonacci);
        std::vector<Param> params = {{"pair", p.lucas.name()}};
        r.expect_equal(params, a.beta, b.beta);
        r.expect_equal(params, a.lambda, b.lambda);
        r.expect_equal(params, Rational(a.eta), Rational(b.eta));
        r.expect_equal(params, Rational(a.omega), Rational(b.omega));
        r.expect_equal(params, a.rho, b.rho);
        r.expect_equal(std::move(params), discriminant_poly(p.lucas),
                       p.lucas.d() * p.lucas.d() + Rational(4) * p.lucas.g());
        return r;
      });
    }
  } else if (id == "res-g") {
    plan.grid = {{"n", 1, N}};
    add_family_grid(plan, all, 1, N, check_res_g_lemmas);
  } else if (id == "res-g-factor") {
    plan.grid = {{"m", 1, N}, {"n", 1, N}};
    add_family_grid2(plan, all, 1, N, check_res_g_factor);
  } else if (id == "consecutive-resultant") {
    plan.grid = {{"n", 2, N}};
    add_family_grid(plan, fib, 2, N, check_consecutive_resultant);
  } else if (id == "res-m-mq1") {
    plan.grid = {{"m", 1, B}, {"q", 1, B}};
    for (const auto& f : fib) {
      for (long m = 1; m <= B; ++m) {
        for (long q = 1; q <= B; ++q) {
          if (m * q >= 2) plan.tasks.push_back([f, m, q] { return check_res_m_mq1(f, m, q); });
        }
      }
    }
  } else if (id == "res-linear-lucas") {
    plan.grid = {{"n", 1, N}};
    auto fams = qualifying(luc, plan, [](const GfpFamily& f) { return f.p0() == 2; }, "stated for L_0 = 2 only");
    add_family_grid(plan, fams, 1, N, check_res_linear_lucas);
  } else if (id == "fib-decomposition") {
    plan.grid = {{"m", 1, B}, {"q", 1, B}, {"r", 1, B}};
    for (const auto& f : fib) {
      for (long m = 1; m <= B; ++m) {
        for (long q = 1; q <= B; ++q) {
          for (long r = 1; r <= B; ++r) {
            plan.tasks.push_back([f, m, q, r] { return check_fib_decomposition(f, m, q, r); });
          }
        }
      }
    }
  } else if (id == "lucas-decomposition") {
    plan.grid = {{"m", 2, B}, {"q", 1, B}, {"r", 1, B - 1}};
    for (const auto& f : luc) {
      for (long m = 2; m <= B; ++m) {
        for (long q = 1; q <= B; ++q) {
          for (long r = 1; r < m; ++r) {
            plan.tasks.push_back([f, m, q, r] { return check_lucas_decomposition(f, m, q, r); });
          }
        }
      }
    }
  } else if (id == "mixed-identities") {
    plan.grid = {{"n", 1, B}, {"q", 1, B}, {"r", 0, B}};
    for (const auto& p : pairs_of(config, plan.notes)) {
      for (long n = 1; n <= B; ++n) {
        for (long q = 1; q <= B; ++q) {
          for (long r = 0; r <= B; ++r) {
            if (q == 1 && r > n) continue;
            plan.tasks.push_back([p, n, q, r] { return check_mixed_identities(p, n, q, r); });
          }
        }
      }
    }
  } else if (id == "gcd-fib") {
    plan.grid = {{"m", 1, N}, {"n", 1, N}};
    add_family_grid2(plan, fib, 1, N, check_gcd_fib);
  } else if (id == "gcd-lucas") {
    plan.grid = {{"m", 1, N}, {"n", 1, N}};
    add_family_grid2(plan, luc, 1, N, check_gcd_lucas);
  } else if (id == "gcd-mixed") {
    plan.grid = {{"n", 1, N}, {"m", 1, N}};
    add_pair_grid2(plan, pairs_of(config, plan.notes), 1, N, check_gcd_mixed);
  } else if (id == "zero-criteria") {
    plan.grid = {{"m", 1, N}, {"n", 1, N}};
    add_family_grid2(plan, fib, 1, N, check_zero_criteria_fib);
    add_family_grid2(plan, luc, 1, N, check_zero_criteria_lucas);
    add_pair_grid2(plan, pairs_of(config, plan.notes), 1, N, check_zero_criteria_mixed);
  } else if (id == "fib-mod-disc" || id == "res-disc-poly") {
    plan.grid = {{"n", 1, N}};
    auto fams = qualifying(fib, plan, constant_g, "needs constant g");
    add_family_grid(plan, fams, 1, N, id == "fib-mod-disc" ? fib_mod_disc : check_res_disc_poly);
  } else {
    throw PreconditionError("unknown identity '" + id + "'");
  }
  return plan;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> catalog = {
      {"res-fib-fib", {"thm3.1"}, "Res(F_n, F_m) closed form equals the Sylvester resultant"},
      {"res-luc-luc", {"thm3.2"}, "Res(L_m, L_n) closed form equals the Sylvester resultant"},
      {"res-luc-fib", {"thm3.3"}, "Res(L_n, F_m) closed form for conjugate pairs equals the Sylvester resultant"},
      {"disc-fib", {"thm3.4"}, "Dis(F_n) closed form equals the Sylvester discriminant"},
      {"disc-luc", {"thm3.5"}, "Dis(L_n) closed form equals the Sylvester discriminant"},
      {"derivatives", {"thm5.1"}, "closed-form F_n' and L_n' equal formal derivatives"},
      {"deriv-sequences", {}, "derivative prefixes at x = 1, 2 match stored values"},
      {"resultant-axioms", {}, "swap, multiplicative, power, reduction and vanishing laws on random triples"},
      {"product-discriminant", {}, "Dis(PQ) = Dis(P) Dis(Q) Res(P,Q)^2 on random coprime pairs"},
      {"degree-law", {}, "degree and leading coefficient of generated members"},
      {"conjugate-constants", {}, "conjugate families share beta, lambda, eta, omega, rho"},
      {"res-g", {}, "Res(g, F_n) = rho^(n-1), Res(g, L_n) = rho^n"},
      {"res-g-factor", {}, "Res(G_m, g G_n) factors through Res(G_m, G_n)"},
      {"consecutive-resultant", {}, "Res(F_n, F_(n-1)) closed form"},
      {"res-m-mq1", {}, "Res(F_m, F_(mq-1)) closed form"},
      {"res-linear-lucas", {}, "Res(L_1, L_n) closed form for L_0 = 2"},
      {"fib-decomposition", {}, "F_m divides F_(mq+r) - g F_(mq-1) F_r"},
      {"lucas-decomposition", {}, "L_m divides L_(mq+r) minus its parity tail"},
      {"mixed-identities", {}, "F_(nq+r) and alpha L_(nq+r) through conjugate products"},
      {"gcd-fib", {}, "gcd(F_m, F_n) = 1 iff gcd(m, n) = 1"},
      {"gcd-lucas", {}, "gcd(L_m, L_n) by 2-adic valuations"},
      {"gcd-mixed", {}, "gcd(L_n, F_m) by 2-adic valuations"},
      {"zero-criteria", {}, "closed-form zero branch iff resultant 0 iff shared factor"},
      {"fib-mod-disc", {}, "F_n mod (d^2 + 4g) closed form"},
      {"res-disc-poly", {}, "Res(d^2 + 4g, F_n) closed form"},
  };
  return catalog;
}

std::vector<std::string> resolve_identities(const std::vector<std::string>& requested) {
  const auto& catalog = identity_catalog();
  std::vector<bool> chosen(catalog.size(), requested.empty());
  for (const auto& name : requested) {
    bool found = false;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const auto& info = catalog[i];
      if (info.id == name || std::find(info.aliases.begin(), info.aliases.end(), name) != info.aliases.end()) {
        chosen[i] = true;
        found = true;
      }
    }
    if (!found) throw PreconditionError("unknown identity '" + name + "'");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (chosen[i]) out.push_back(catalog[i].id);
  }
  return out;
}

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<VerificationReport> results(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (const std::exception& e) {
      results[i].fail({{"task", static_cast<long>(i)}}, std::string("no error"), std::string("error: ") + e.what());
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

VerificationReport run_identity(const std::string& id, const SweepConfig& config) {
  Plan plan = plan_for(id, config);
  VerificationReport merged;
  merged.identity = id;
  merged.grid = plan.grid;
  merged.notes = plan.notes;
  for (const auto& r : run_tasks(plan.tasks, config.jobs)) merged.merge(r);
  return merged;
}

std::vector<VerificationReport> run_verification(const std::vector<std::string>& identities,
                                                 const SweepConfig& config) {
  std::vector<VerificationReport> out;
  for (const auto& id : resolve_identities(identities)) out.push_back(run_identity(id, config));
  return out;
}

RandomPolynomials::RandomPolynomials(std::uint64_t seed) : engine_(seed) {}

unsigned RandomPolynomials::uniform(unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(engine_);
}

Polynomial RandomPolynomials::next(unsigned min_degree, unsigned max_degree, long bound) {
  const unsigned degree = uniform(min_degree, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = Rational(coeff(engine_));
  while (c.back().is_zero()) c.back() = Rational(coeff(engine_));
  return Polynomial(std::move(c));
}

}  // namespace gfp
