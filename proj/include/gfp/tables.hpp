#ifndef GFP_TABLES_HPP
#define GFP_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gfp {

/// One oracle-checked value. `m` is unset for single-index tables.
struct TableCell {
  std::optional<long> m;
  long n = 0;
  std::string value;
  std::string oracle;
  bool matches() const { return value == oracle; }
};

struct TableRow {
  std::string family;
  /// The row formula with the family constants substituted.
  std::string formula;
  std::vector<TableCell> cells;
};

struct Table {
  int number = 0;
  std::string title;
  /// Index names, e.g. {"m", "n"} or {"n"}.
  std::vector<std::string> axes;
  std::vector<TableRow> rows;

  std::size_t mismatches() const;
};

/// Tables 2 to 6: same-family resultants (Fibonacci-type, Lucas-type),
/// conjugate-pair resultants, discriminants and derivatives, each cell
/// computed from its closed form and compared with the Sylvester or
/// formal-derivative oracle. Throws PreconditionError for other numbers or
/// max_n < 2.
Table build_table(int number, long max_n);

std::string render_human(const Table& table);
/// Header `family,m,n,value` (or `family,n,value`).
std::string render_csv(const Table& table);
nlohmann::json to_json(const Table& table);

}  // namespace gfp

#endif  // GFP_TABLES_HPP
