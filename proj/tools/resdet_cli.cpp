// resdet: verify determinant identities for power-residue matrices.
//
//   resdet verify --p 13 --k 3
//   resdet sweep --p-min 3 --p-max 600 --jobs 8 --out results.jsonl
//   resdet counts --p 13 --k 2
//   resdet export --in results.jsonl --format csv --out results.csv

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "resdet/curves.hpp"
#include "resdet/error.hpp"
#include "resdet/report_io.hpp"
#include "resdet/sweep.hpp"
#include "resdet/theorems.hpp"

namespace {

using namespace resdet;

constexpr int kUsageError = 2;

std::vector<ClaimId> parse_claims(const std::vector<std::string>& names) {
  std::vector<ClaimId> out;
  for (const auto& raw : names) {
    std::stringstream ss(raw);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      // Family aliases for the two-part statements.
      if (name == "THM_A") {
        out.insert(out.end(), {ClaimId::kThmAI, ClaimId::kThmAII});
      } else if (name == "THM_B") {
        out.insert(out.end(), {ClaimId::kThmBI, ClaimId::kThmBII});
      } else if (name == "COR_1") {
        out.insert(out.end(), {ClaimId::kCor1I, ClaimId::kCor1II});
      } else if (auto id = parse_claim(name)) {
        out.push_back(*id);
      } else {
        throw InvalidArgument("unknown claim \"" + name + "\"");
      }
    }
  }
  return out;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "jsonl") return OutputFormat::kJsonl;
  if (s == "csv") return OutputFormat::kCsv;
  throw InvalidArgument("--format must be jsonl or csv");
}

struct CommonFlags {
  std::uint64_t exact_cap = 600;
  std::uint64_t modp_cap = 3000;
  std::uint64_t bp_cap = 200;
  std::uint64_t carlitz_cap = 31;
  std::uint64_t crt_threshold = 200;
  bool skip_primality = false;
  unsigned jobs = 1;
  std::uint64_t seed = 42;
  std::uint64_t lemma_trials = 1000;
  std::vector<std::string> claims;
  std::string out;
  std::string format = "jsonl";
  CLI::Option* jobs_opt = nullptr;

  void add_to(CLI::App* app) {
    app->add_option("--claims", claims, "Claim ids (comma separated; THM_A, THM_B, COR_1 expand)");
    app->add_option("--exact-cap", exact_cap, "Largest p for exact-determinant claims");
    app->add_option("--modp-cap", modp_cap, "Largest p for mod-p claims");
    app->add_option("--bp-cap", bp_cap, "Largest p for the B_p claim");
    app->add_option("--carlitz-cap", carlitz_cap, "Largest p for the Carlitz check");
    app->add_option("--crt-threshold", crt_threshold, "Dimension above which determinants use CRT");
    app->add_flag("--skip-primality-check", skip_primality, "Trust that --p is prime");
    jobs_opt = app->add_option("--jobs", jobs, "Worker threads (default: $RESIDUE_DET_JOBS or 1)")
                   ->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Seed for the random palindromic circulant check");
    app->add_option("--lemma-trials", lemma_trials, "Tuples drawn by LEMMA_2_1");
    app->add_option("--out", out, "Results file");
    app->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  }

  SweepConfig config() const {
    SweepConfig cfg;
    cfg.claims = parse_claims(claims);
    cfg.jobs = jobs;
    // CLI11 drops unparsable environment values silently, so read it here
    if (jobs_opt->count() == 0) {
      if (const char* env = std::getenv("RESIDUE_DET_JOBS"); env && *env) {
        unsigned long v = 0;
        const auto [end, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec != std::errc() || *end != '\0' || v == 0 || v > 1024) {
          throw InvalidArgument(std::string("RESIDUE_DET_JOBS must be a positive integer, got \"") + env + "\"");
        }
        cfg.jobs = static_cast<unsigned>(v);
      }
    }
    cfg.output_path = out;
    cfg.format = parse_format(format);
    cfg.seed = seed;
    cfg.lemma_trials = lemma_trials;
    cfg.suite.exact_cap = exact_cap;
    cfg.suite.modp_cap = modp_cap;
    cfg.suite.bp_cap = bp_cap;
    cfg.suite.carlitz_cap = carlitz_cap;
    cfg.suite.det.crt_threshold = crt_threshold;
    cfg.suite.validation = skip_primality ? Validation::kSkip : Validation::kCheck;
    return cfg;
  }
};

void print_reports(std::ostream& out, const std::vector<CheckReport>& reports) {
  out << std::left << std::setw(19) << "claim" << std::setw(7) << "p" << std::setw(6) << "k"
      << std::setw(7) << "status" << "witnesses / detail\n";
  for (const auto& r : reports) {
    std::string w;
    for (const auto& [name, value] : r.witnesses) {
      if (name.rfind("coef_", 0) == 0) continue;
      w += name + "=" + csv_number(value) + " ";
    }
    if (r.g) w += "g=" + std::to_string(*r.g) + " ";
    if (!r.detail.empty()) w += "(" + r.detail + ")";
    out << std::left << std::setw(19) << claim_name(r.claim) << std::setw(7) << r.p
        << std::setw(6) << r.k << std::setw(7) << status_name(r.status) << w << '\n';
  }
}

int cmd_verify(std::uint64_t p, const std::optional<std::uint64_t>& k, const CommonFlags& flags) {
  SweepConfig cfg = flags.config();
  const PrimeModulus pm(p, cfg.suite.validation);
  if (k) {
    if (*k < 2 || (p - 1) % *k != 0) {
      throw InvalidArgument("k = " + std::to_string(*k) + " must be >= 2 and divide p - 1 = " +
                            std::to_string(p - 1));
    }
    cfg.k_filter = {*k};
    if (cfg.claims.empty()) {
      cfg.claims = {ClaimId::kThmAI, ClaimId::kThmAII, ClaimId::kThmBI,  ClaimId::kThmBII,
                    ClaimId::kCor1I, ClaimId::kCor1II, ClaimId::kCor2,   ClaimId::kThmC,
                    ClaimId::kRemarkPrimeList};
    }
  }
  std::vector<CheckReport> reports = run_prime(pm.value(), cfg);
  const bool lemma = std::find(cfg.claims.begin(), cfg.claims.end(), ClaimId::kLemma21) !=
                     cfg.claims.end();
  if (lemma) reports.push_back(verify_lemma_2_1_random(cfg.seed, cfg.lemma_trials));
  sort_canonical(reports);

  print_reports(std::cout, reports);
  if (!cfg.output_path.empty()) {
    const bool jsonl = cfg.format == OutputFormat::kJsonl;
    std::ofstream file(cfg.output_path, std::ios::out | (jsonl ? std::ios::app : std::ios::trunc));
    if (!file) throw InvalidArgument("cannot open " + cfg.output_path);
    if (jsonl) {
      for (const auto& r : reports) file << to_jsonl_line(r) << '\n';
    } else {
      write_csv(file, reports);
    }
  }
  Status worst = Status::kPass;
  for (const auto& r : reports)
    if (severity(r.status) > severity(worst)) worst = r.status;
  return exit_code(worst);
}

int cmd_sweep(SweepConfig cfg) {
  const SweepSummary summary = run_sweep(cfg);
  print_summary(std::cout, summary);
  return exit_code(summary.worst);
}

int cmd_counts(std::uint64_t p, std::uint64_t k, bool skip_primality) {
  const PrimeModulus pm(p, skip_primality ? Validation::kSkip : Validation::kCheck);
  const ResidueSystem rs = kth_power_residues(pm, k);
  const CurveCounts cc = curve_counts(rs);
  bool agree = true;
  auto line = [&](CurveFamily f, std::int64_t value) {
    const std::int64_t naive = trace_naive(f, pm, k, rs.g);
    agree = agree && naive == value;
    std::cout << family_name(f) << "_p(k) = " << value << "   (character sum " << value
              << ", point count " << naive << ", " << (naive == value ? "agree" : "DISAGREE")
              << ")\n";
  };
  std::cout << "p = " << p << ", k = " << k << ", m = " << rs.m << "\n";
  if (k % 2 == 0) {
    line(CurveFamily::kA, cc.a);
    line(CurveFamily::kB, cc.b);
  } else {
    line(CurveFamily::kC, *cc.c);
    line(CurveFamily::kD, *cc.d);
    std::cout << "g = " << cc.g_used << "\n";
    std::cout << "c^2 + d^2 = " << (*cc.c) * (*cc.c) + (*cc.d) * (*cc.d) << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_export(const std::string& in_path, const std::string& out_path, const std::string& format) {
  std::ifstream in(in_path);
  if (!in) throw InvalidArgument("cannot open " + in_path);
  std::vector<CheckReport> reports = read_jsonl(in);
  sort_canonical(reports);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::out | std::ios::trunc);
    if (!file) throw InvalidArgument("cannot open " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (parse_format(format) == OutputFormat::kCsv) {
    write_csv(out, reports);
  } else {
    for (const auto& r : reports) out << to_jsonl_line(r) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinants of Legendre-symbol matrices on k-th power residues"};
  app.require_subcommand(1);

  CommonFlags verify_flags;
  std::uint64_t verify_p = 0;
  std::optional<std::uint64_t> verify_k;
  auto* verify = app.add_subcommand("verify", "Check every claim for one prime (and k)");
  verify->add_option("--p", verify_p, "Prime")->required();
  verify->add_option("--k", verify_k, "Divisor of p - 1");
  verify_flags.add_to(verify);

  CommonFlags sweep_flags;
  std::uint64_t p_min = 3, p_max = 100;
  std::vector<std::uint64_t> k_filter;
  auto* sweep = app.add_subcommand("sweep", "Check claims over a range of primes");
  sweep->add_option("--p-min", p_min, "Smallest prime");
  sweep->add_option("--p-max", p_max, "Largest prime");
  sweep->add_option("--k", k_filter, "Restrict to these k (default: all divisors)")->delimiter(',');
  sweep_flags.add_to(sweep);

  std::uint64_t counts_p = 0, counts_k = 0;
  bool counts_skip = false;
  auto* counts = app.add_subcommand("counts", "Print the curve trace terms for (p, k)");
  counts->add_option("--p", counts_p, "Prime")->required();
  counts->add_option("--k", counts_k, "Divisor of p - 1")->required();
  counts->add_flag("--skip-primality-check", counts_skip, "Trust that --p is prime");

  std::string export_in, export_out, export_format = "jsonl";
  auto* exp = app.add_subcommand("export", "Canonically sort a JSONL results file, optionally as CSV");
  exp->add_option("--in", export_in, "JSONL results file")->required();
  exp->add_option("--out", export_out, "Output file (default: stdout)");
  exp->add_option("--format", export_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) return cmd_verify(verify_p, verify_k, verify_flags);
    if (*sweep) {
      SweepConfig cfg = sweep_flags.config();
      cfg.p_min = p_min;
      cfg.p_max = p_max;
      cfg.k_filter = k_filter;
      return cmd_sweep(cfg);
    }
    if (*counts) return cmd_counts(counts_p, counts_k, counts_skip);
    if (*exp) return cmd_export(export_in, export_out, export_format);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return kUsageError;
}
