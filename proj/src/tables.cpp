#include "gfp/tables.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "gfp/closed_forms.hpp"
#include "gfp/errors.hpp"
#include "gfp/family.hpp"
#include "gfp/identities.hpp"
#include "gfp/sylvester.hpp"

namespace gfp {

namespace {

std::string paren(const std::string& s) {
  if (s.find_first_of(" +-/*") == std::string::npos) return s;
  return "(" + s + ")";
}

std::string paren(const Rational& r) { return paren(r.to_string()); }

std::vector<GfpFamily> builtins_of(Kind kind) {
  std::vector<GfpFamily> out;
  for (const auto& name : builtin_family_names()) {
    GfpFamily f = builtin_family(name);
    if (f.kind() == kind) out.push_back(std::move(f));
  }
  return out;
}

std::vector<ConjugatePair> builtin_pairs() {
  std::vector<ConjugatePair> out;
  for (const auto& lucas : builtins_of(Kind::LucasType)) out.push_back(conjugate_pair_of(lucas));
  return out;
}

TableCell cell(std::optional<long> m, long n, const Rational& closed, const Rational& oracle) {
  return {m, n, closed.to_string(), oracle.to_string()};
}

Table fib_resultants(long max_n) {
  Table t{2, "Resultants of Fibonacci-type polynomials, Res(F_m, F_n)", {"m", "n"}, {}};
  for (const auto& f : builtins_of(Kind::FibonacciType)) {
    const Rational base = resultant_base(family_constants(f));
    TableRow row{f.name(), "0 if gcd(m,n) > 1, else " + paren(base) + "^((m-1)(n-1)/2)", {}};
    for (long m = 1; m <= max_n; ++m) {
      for (long n = 1; n <= max_n; ++n) {
        row.cells.push_back(cell(m, n, res_ff_closed(f, m, n).value, resultant(f.generate(m), f.generate(n))));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table lucas_resultants(long max_n) {
  Table t{3, "Resultants of Lucas-type polynomials, Res(L_m, L_n)", {"m", "n"}, {}};
  for (const auto& f : builtins_of(Kind::LucasType)) {
    const FamilyConstants c = family_constants(f);
    const std::string eta = std::to_string(c.eta);
    TableRow row{f.name(),
                 "0 if E2(m) = E2(n), else " + paren(std::to_string(f.alpha())) + "^(-" + eta + "(m+n)) 2^(" + eta +
                     " gcd(m,n)) " + paren(resultant_base(c)) + "^(mn/2)",
                 {}};
    for (long m = 1; m <= max_n; ++m) {
      for (long n = 1; n <= max_n; ++n) {
        row.cells.push_back(cell(m, n, res_ll_closed(f, m, n).value, resultant(f.generate(m), f.generate(n))));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table mixed_resultants(long max_n) {
  Table t{4, "Resultants of conjugate polynomials, Res(L_n, F_m)", {"n", "m"}, {}};
  for (const auto& p : builtin_pairs()) {
    const FamilyConstants c = family_constants(p.lucas);
    const std::string eta = std::to_string(c.eta);
    TableRow row{p.lucas.name() + "/" + p.fibonacci.name(),
                 "0 if E2(n) < E2(m), else 2^(" + eta + " gcd(m,n) - " + eta + ") " +
                     paren(std::to_string(p.lucas.alpha())) + "^(" + eta + "(1-m)) " + paren(resultant_base(c)) +
                     "^(n(m-1)/2)",
                 {}};
    for (long n = 1; n <= max_n; ++n) {
      for (long m = 1; m <= max_n; ++m) {
        row.cells.push_back(cell(n, m, res_lf_closed(p.lucas, p.fibonacci, n, m).value,
                                 resultant(p.lucas.generate(n), p.fibonacci.generate(m))));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table discriminants(long max_n) {
  Table t{5, "Discriminants, Dis(G_n)", {"n"}, {}};
  for (const auto& name : builtin_family_names()) {
    const GfpFamily f = builtin_family(name);
    if (!discriminant_formula_applies(f)) continue;
    const FamilyConstants c = family_constants(f);
    const std::string rho = paren(-c.rho);
    const Rational dp = f.d().derivative().lc();
    const std::string n_dp = dp == Rational(1) ? "n" : "(" + dp.to_string() + "n)";
    const std::string beta = paren(c.beta);
    TableRow row{f.name(), "", {}};
    long lo = 1;
    if (f.is_fibonacci_type()) {
      row.formula = rho + "^((n-2)(n-1)/2) " + paren(Rational(2) * dp) + "^(n-1) n^(n-3) " + beta + "^((n-1)(n-3))";
      lo = 2;
    } else {
      row.formula = rho + "^(n(n-1)/2) 2^(n-1) " + n_dp + "^n " + paren(std::to_string(f.alpha())) +
                    "^(2-2n) " + beta + "^(n(n-2))";
    }
    for (long n = lo; n <= max_n; ++n) {
      const Rational closed = f.is_fibonacci_type() ? disc_f_closed(f, n) : disc_l_closed(f, n);
      row.cells.push_back(cell(std::nullopt, n, closed, discriminant(f.generate(n))));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table derivatives(long max_n) {
  Table t{6, "Derivatives, G_n'(x)", {"n"}, {}};
  for (const auto& p : builtin_pairs()) {
    if (!p.lucas.g().is_constant()) continue;
    const std::string dp = p.lucas.d().derivative().to_string();
    const std::string alpha = std::to_string(p.lucas.alpha());
    const std::string disc = paren(discriminant_poly(p.lucas).to_string());
    TableRow fib{p.fibonacci.name(),
                 paren(dp) + " (" + alpha + " n L_n - " + paren(p.lucas.d().to_string()) + " F_n) / " + disc, {}};
    TableRow luc{p.lucas.name(), "n " + paren(dp) + " F_n / " + alpha, {}};
    for (long n = 1; n <= max_n; ++n) {
      fib.cells.push_back({std::nullopt, n, deriv_f_closed(p, n).to_string(),
                           p.fibonacci.generate(n).derivative().to_string()});
      luc.cells.push_back(
          {std::nullopt, n, deriv_l_closed(p, n).to_string(), p.lucas.generate(n).derivative().to_string()});
    }
    t.rows.push_back(std::move(fib));
    t.rows.push_back(std::move(luc));
  }
  return t;
}

}  // namespace

std::size_t Table::mismatches() const {
  std::size_t count = 0;
  for (const auto& row : rows) {
    count += std::count_if(row.cells.begin(), row.cells.end(), [](const TableCell& c) { return !c.matches(); });
  }
  return count;
}

Table build_table(int number, long max_n) {
  if (max_n < 2) throw PreconditionError("tables need max_n >= 2, got " + std::to_string(max_n));
  switch (number) {
    case 2: return fib_resultants(max_n);
    case 3: return lucas_resultants(max_n);
    case 4: return mixed_resultants(max_n);
    case 5: return discriminants(max_n);
    case 6: return derivatives(max_n);
    default: throw PreconditionError("no table " + std::to_string(number) + " (expected 2 to 6)");
  }
}

std::string render_human(const Table& table) {
  std::ostringstream out;
  out << "Table " << table.number << ": " << table.title << "\n";
  for (const auto& row : table.rows) {
    out << "\n" << row.family << ": " << row.formula << "\n";
    if (table.axes.size() == 2) {
      // Square grid: first index down, second across.
      std::map<std::pair<long, long>, const TableCell*> at;
      long hi = 0;
      std::size_t width = 1;
      for (const auto& c : row.cells) {
        at[{*c.m, c.n}] = &c;
        hi = std::max(hi, c.n);
        width = std::max(width, c.value.size());
      }
      width = std::max<std::size_t>(width, 3) + 1;
      out << std::setw(4) << (table.axes[0] + "\\" + table.axes[1]);
      for (long j = 1; j <= hi; ++j) out << std::setw(static_cast<int>(width)) << j;
      out << "\n";
      for (long i = 1; i <= hi; ++i) {
        out << std::setw(4) << i;
        for (long j = 1; j <= hi; ++j) {
          auto it = at.find({i, j});
          out << std::setw(static_cast<int>(width)) << (it == at.end() ? "" : it->second->value);
        }
        out << "\n";
      }
    } else {
      for (const auto& c : row.cells) out << "  n=" << c.n << "  " << c.value << "\n";
    }
  }
  const std::size_t bad = table.mismatches();
  out << "\n" << (bad == 0 ? "all cells match the oracle" : std::to_string(bad) + " cells MISMATCH the oracle") << "\n";
  return out.str();
}

std::string render_csv(const Table& table) {
  std::ostringstream out;
  out << "family," << (table.axes.size() == 2 ? table.axes[0] + "," + table.axes[1] : "n") << ",value\n";
  for (const auto& row : table.rows) {
    for (const auto& c : row.cells) {
      out << row.family << ',';
      if (c.m) out << *c.m << ',';
      const bool quote = c.value.find(',') != std::string::npos;
      out << c.n << ',' << (quote ? "\"" + c.value + "\"" : c.value) << "\n";
    }
  }
  return out.str();
}

nlohmann::json to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : row.cells) {
      nlohmann::json j;
      if (c.m) j[table.axes[0]] = *c.m;
      j[table.axes.back()] = c.n;
      j["value"] = c.value;
      j["oracle"] = c.oracle;
      j["match"] = c.matches();
      cells.push_back(std::move(j));
    }
    rows.push_back({{"family", row.family}, {"formula", row.formula}, {"cells", std::move(cells)}});
  }
  return {{"table", table.number},
          {"title", table.title},
          {"axes", table.axes},
          {"mismatches", table.mismatches()},
          {"rows", std::move(rows)}};
}

}  // namespace gfp
