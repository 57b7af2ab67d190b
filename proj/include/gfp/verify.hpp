#ifndef GFP_VERIFY_HPP
#define GFP_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gfp/family.hpp"
#include "gfp/identities.hpp"

namespace gfp {

struct IdentityInfo {
  std::string id;
  std::vector<std::string> aliases;
  std::string description;
};

/// Every identity a sweep can run, in execution order.
const std::vector<IdentityInfo>& identity_catalog();

/// Maps ids and aliases to canonical ids, preserving catalog order and
/// dropping duplicates. Empty input selects everything. Unknown names
/// throw PreconditionError.
std::vector<std::string> resolve_identities(const std::vector<std::string>& requested);

struct SweepConfig {
  /// Upper bound for the m, n indices of every grid.
  long max_n = 12;
  /// Upper bound for m, q, r in the division identities (capped by max_n).
  long decomposition_bound = 10;
  /// Families to sweep; empty means all built-ins.
  std::vector<GfpFamily> families;
  unsigned jobs = 1;
  std::size_t random_triples = 200;
  std::size_t random_pairs = 100;
  std::uint64_t seed = 0x6766705f73656564ULL;
};

/// Runs one identity over its grid. Tasks are spread over config.jobs
/// threads; the merged report lists failures in grid order regardless of
/// scheduling. Errors raised inside a task become failures.
VerificationReport run_identity(const std::string& id, const SweepConfig& config);

/// Runs each resolved identity in catalog order.
std::vector<VerificationReport> run_verification(const std::vector<std::string>& identities,
                                                 const SweepConfig& config);

/// Runs `tasks` on `jobs` threads, returning results in task order.
std::vector<VerificationReport> run_tasks(const std::vector<std::function<VerificationReport()>>& tasks,
                                          unsigned jobs);

/// Deterministic random polynomial with degree in [min_degree, max_degree]
/// and integer coefficients in [-bound, bound].
class RandomPolynomials {
 public:
  explicit RandomPolynomials(std::uint64_t seed);
  Polynomial next(unsigned min_degree, unsigned max_degree, long bound = 9);
  unsigned uniform(unsigned lo, unsigned hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gfp

#endif  // GFP_VERIFY_HPP
