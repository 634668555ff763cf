#include "qamp/report.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <thread>

#include "qamp/rng.hpp"

namespace qamp {

std::string format_double(double value) {
  char buf[64];
  if (value == std::floor(value) && std::abs(value) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", value);
    return buf;
  }
  // Shortest representation that round-trips a double.
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) return buf;
  }
  return buf;
}

std::string trial_csv_header(const std::string& stat_name) {
  return "trial,verdict," + stat_name + ",queries_v,queries_v_dag,seed\n";
}

std::string trial_csv_row(const TrialRow& row) {
  return std::to_string(row.trial) + "," + verdict_name(row.verdict) + "," +
         format_double(row.stat) + "," + std::to_string(row.queries_v) + "," +
         std::to_string(row.queries_v_dag) + "," + std::to_string(row.seed) + "\n";
}

std::string trials_to_csv(const std::vector<TrialRow>& rows, const std::string& stat_name) {
  std::string out = trial_csv_header(stat_name);
  for (const auto& row : rows) out += trial_csv_row(row);
  return out;
}

std::vector<TrialRow> run_parallel_trials(
    int trials, int threads, std::uint64_t master_seed,
    const std::function<TrialRow(int trial, std::uint64_t seed)>& body) {
  if (trials < 1) throw ValidationError("trial count must be >= 1");
  if (threads < 1) threads = 1;

  std::vector<TrialRow> rows(trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const int trial = next.fetch_add(1);
      if (trial >= trials) return;
      try {
        rows[trial] = body(trial, derive_seed(master_seed, trial));
        rows[trial].trial = trial;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace qamp
