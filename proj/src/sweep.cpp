#include "resdet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "resdet/error.hpp"

namespace resdet {

namespace {

// Unbounded multi-producer queue drained by one consumer.
class ReportQueue {
 public:
  void push(std::vector<CheckReport> batch) {
    {
      std::lock_guard lock(mu_);
      for (auto& r : batch) items_.push_back(std::move(r));
    }
    cv_.notify_one();
  }
  void producer_done() {
    {
      std::lock_guard lock(mu_);
      ++done_;
    }
    cv_.notify_one();
  }
  // Empty result means every producer finished and the queue is drained.
  std::vector<CheckReport> pop_all(unsigned producers) {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return !items_.empty() || done_ == producers; });
    std::vector<CheckReport> out(std::make_move_iterator(items_.begin()),
                                 std::make_move_iterator(items_.end()));
    items_.clear();
    return out;
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<CheckReport> items_;
  unsigned done_ = 0;
};

bool wanted(const SweepConfig& cfg, ClaimId id) {
  return cfg.claims.empty() ||
         std::find(cfg.claims.begin(), cfg.claims.end(), id) != cfg.claims.end();
}

bool wanted_any(const SweepConfig& cfg, std::initializer_list<ClaimId> ids) {
  return std::any_of(ids.begin(), ids.end(), [&](ClaimId id) { return wanted(cfg, id); });
}

void keep(std::vector<CheckReport>& out, const SweepConfig& cfg, CheckReport r) {
  if (wanted(cfg, r.claim)) out.push_back(std::move(r));
}

}  // namespace

void validate(const SweepConfig& cfg) {
  if (cfg.p_min < 3) throw InvalidArgument("--p-min must be >= 3");
  if (cfg.p_max < cfg.p_min) throw InvalidArgument("--p-max must be >= --p-min");
  if (cfg.jobs == 0) throw InvalidArgument("--jobs must be >= 1");
}

std::vector<CheckReport> run_prime(std::uint64_t p, const SweepConfig& cfg) {
  const PrimeModulus pm(p, Validation::kSkip);
  std::vector<CheckReport> out;
  std::optional<PairContext> quadratic;  // k = 2, shared with the S(1,p) check

  for (std::uint64_t k = 2; k <= p - 1; ++k) {
    if ((p - 1) % k != 0) continue;
    if (!cfg.k_filter.empty() &&
        std::find(cfg.k_filter.begin(), cfg.k_filter.end(), k) == cfg.k_filter.end())
      continue;
    PairContext ctx(pm, k, cfg.suite);
    if (k % 2 == 0) {
      if (wanted_any(cfg, {ClaimId::kThmAI, ClaimId::kThmAII})) keep(out, cfg, verify_theorem_A(ctx));
      if (wanted(cfg, ClaimId::kThmC)) keep(out, cfg, verify_theorem_C(ctx));
    } else {
      if (wanted_any(cfg, {ClaimId::kThmBI, ClaimId::kThmBII})) keep(out, cfg, verify_theorem_B(ctx));
      if (wanted(cfg, ClaimId::kCor2)) keep(out, cfg, verify_corollary_2(ctx));
      if (k == 3 && p % 12 == 1) {
        if (wanted_any(cfg, {ClaimId::kCor1I, ClaimId::kCor1II}))
          for (auto& r : verify_corollary_1(ctx)) keep(out, cfg, std::move(r));
        if (wanted(cfg, ClaimId::kRemarkPrimeList)) keep(out, cfg, verify_remark_prime_list(ctx));
      }
    }
    if (k == 2) quadratic.emplace(std::move(ctx));
  }

  if (wanted_any(cfg, {ClaimId::kSunS1P, ClaimId::kSunAP, ClaimId::kSunBP})) {
    if (!quadratic) quadratic.emplace(pm, 2, cfg.suite);
    for (auto& r : verify_sun_background(*quadratic)) keep(out, cfg, std::move(r));
  }
  if (wanted(cfg, ClaimId::kCarlitzFmu)) {
    for (std::int64_t mu : cfg.carlitz_mus) keep(out, cfg, verify_carlitz(p, mu, cfg.suite));
  }
  return out;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
  validate(cfg);

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = cfg.p_min | 1; p <= cfg.p_max; p += 2)
    if (is_prime(p)) primes.push_back(p);
  // Largest first, so the expensive primes do not straggle at the end.
  std::reverse(primes.begin(), primes.end());
  const bool with_lemma = wanted(cfg, ClaimId::kLemma21);

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    const auto mode = cfg.format == OutputFormat::kJsonl ? std::ios::app : std::ios::trunc;
    file.open(cfg.output_path, std::ios::out | mode);
    if (!file) throw InvalidArgument("cannot open " + cfg.output_path + " for writing");
  }

  ReportQueue queue;
  std::atomic<std::size_t> next{0};
  const std::size_t task_count = primes.size() + (with_lemma ? 1 : 0);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.jobs, std::max<std::size_t>(task_count, 1)));

  auto work = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < task_count;) {
      if (idx < primes.size()) {
        queue.push(run_prime(primes[idx], cfg));
      } else {
        queue.push({verify_lemma_2_1_random(cfg.seed, cfg.lemma_trials)});
      }
    }
    queue.producer_done();
  };

  SweepSummary summary;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (;;) {
      auto batch = queue.pop_all(workers);
      if (batch.empty()) break;
      for (auto& r : batch) {
        if (file.is_open() && cfg.format == OutputFormat::kJsonl) file << to_jsonl_line(r) << '\n';
        summary.reports.push_back(std::move(r));
      }
      if (file.is_open()) file.flush();
    }
  }

  sort_canonical(summary.reports);
  if (file.is_open() && cfg.format == OutputFormat::kCsv) write_csv(file, summary.reports);

  std::set<std::uint64_t> divisors;
  for (const auto& r : summary.reports) {
    summary.counts[r.claim][static_cast<std::size_t>(r.status)]++;
    if (severity(r.status) > severity(summary.worst)) summary.worst = r.status;
    if (r.claim == ClaimId::kRemarkPrimeList || r.claim == ClaimId::kCor1II) {
      auto it = r.witnesses.find("p_divides_det");
      if (it != r.witnesses.end() && it->second == 1) divisors.insert(r.p);
    }
  }
  summary.divisor_primes.assign(divisors.begin(), divisors.end());
  return summary;
}

void print_summary(std::ostream& out, const SweepSummary& s) {
  out << std::left << std::setw(20) << "claim" << std::right << std::setw(8) << "PASS"
      << std::setw(8) << "FAIL" << std::setw(8) << "SKIP" << std::setw(8) << "FATAL" << '\n';
  for (const auto& [claim, c] : s.counts) {
    out << std::left << std::setw(20) << claim_name(claim) << std::right
        << std::setw(8) << c[static_cast<std::size_t>(Status::kPass)]
        << std::setw(8) << c[static_cast<std::size_t>(Status::kFail)]
        << std::setw(8) << c[static_cast<std::size_t>(Status::kSkip)]
        << std::setw(8) << c[static_cast<std::size_t>(Status::kFatal)] << '\n';
  }
  if (!s.divisor_primes.empty()) {
    out << "primes p = 1 mod 12 with p | det W_p(3):";
    for (auto p : s.divisor_primes) out << ' ' << p;
    out << '\n';
  }
  out << "worst status: " << status_name(s.worst) << '\n';
}

int exit_code(Status worst) {
  switch (worst) {
    case Status::kPass:
    case Status::kSkip: return 0;
    case Status::kFail: return 1;
    case Status::kFatal: return 3;
  }
  return 0;
}

}  // namespace resdet
