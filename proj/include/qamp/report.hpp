#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qamp/amplifier.hpp"

namespace qamp {

// One CSV row per trial. `stat` is the median folded phase for the
// walk amplifier and the transition count for the alternating baseline.
struct TrialRow {
  int trial = 0;
  Verdict verdict = Verdict::Reject;
  double stat = 0.0;
  std::uint64_t queries_v = 0;
  std::uint64_t queries_v_dag = 0;
  std::uint64_t seed = 0;
};

std::string format_double(double value);  // shortest round-trip decimal

std::string trial_csv_header(const std::string& stat_name);
std::string trial_csv_row(const TrialRow& row);
std::string trials_to_csv(const std::vector<TrialRow>& rows, const std::string& stat_name);

// Fans trials out over `threads` workers. Each trial body receives its index
// and derived seed only, so the result is independent of the schedule; rows
// come back ordered by trial index.
std::vector<TrialRow> run_parallel_trials(
    int trials, int threads, std::uint64_t master_seed,
    const std::function<TrialRow(int trial, std::uint64_t seed)>& body);

}  // namespace qamp
