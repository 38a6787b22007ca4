#pragma once

// Prime sweeps: every prime in [p_min, p_max], every divisor k >= 2 of p - 1
// admitted by the k filter, every selected claim. Workers hand finished
// reports to the calling thread, which alone writes the results file.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resdet/report_io.hpp"
#include "resdet/theorems.hpp"

namespace resdet {

struct SweepConfig {
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 100;
  std::vector<std::uint64_t> k_filter;  // empty: all divisors
  std::vector<ClaimId> claims;          // empty: all claims
  unsigned jobs = 1;
  std::string output_path;              // empty: no results file
  OutputFormat format = OutputFormat::kJsonl;
  std::uint64_t seed = 42;
  std::uint64_t lemma_trials = 1000;
  std::vector<std::int64_t> carlitz_mus = {-1, 0, 1, 2};
  SuiteOptions suite;
};

/// Throws InvalidArgument on p_min < 3, p_max < p_min or jobs == 0.
void validate(const SweepConfig& cfg);

struct SweepSummary {
  std::vector<CheckReport> reports;  // canonical order
  std::map<ClaimId, std::array<std::size_t, 4>> counts;  // indexed by Status
  Status worst = Status::kPass;
  /// Primes whose record shows p | det W_p(3) (REMARK_PRIME_LIST or COR_1_II).
  std::vector<std::uint64_t> divisor_primes;
};

/// Runs the sweep. JSONL output is appended as reports complete; CSV is
/// written once, in canonical order, at the end.
SweepSummary run_sweep(const SweepConfig& cfg);

/// Every report for one prime, as the sweep would produce them.
std::vector<CheckReport> run_prime(std::uint64_t p, const SweepConfig& cfg);

/// Claims x {PASS, FAIL, SKIP, FATAL} table.
void print_summary(std::ostream& out, const SweepSummary& s);

/// 0 all PASS/SKIP, 1 FAIL present, 3 FATAL present.
int exit_code(Status worst);

}  // namespace resdet
