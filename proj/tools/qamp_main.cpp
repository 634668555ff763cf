// Command-line driver: amplified QMA verification experiments, the
// alternating-measurement baseline, Jordan decomposition export, spectral
// oracle queries, witness preparation, and query-count comparison tables.
//
// CSV goes to --out (or stdout); summaries and warnings go to stderr so the
// data stream stays clean. Exit codes: 0 success, 1 validation failure,
// 2 guard violation.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "qamp/alternating.hpp"
#include "qamp/circuit_io.hpp"
#include "qamp/planted.hpp"
#include "qamp/report.hpp"
#include "qamp/witness_prep.hpp"

namespace {

using namespace qamp;

struct CommonOptions {
  std::string circuit_path;
  std::string witness_path;
  double a = 0.9;
  double b = 0.5;
  int rounds = 6;
  double eps_pe = 1.0 / 16.0;
  int trials = 100;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: resolve from QAMP_THREADS or hardware
  std::string out_path;
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QAMP_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void emit(const std::string& out_path, const std::string& data) {
  if (out_path.empty())
    std::cout << data;
  else
    write_file(out_path, data);
}

VerifierCircuit load_circuit(const std::string& path) {
  const auto outcome = try_parse_circuit(read_file(path));
  if (!outcome.circuit) {
    std::string joined = "circuit file '" + path + "' rejected:";
    for (const auto& e : outcome.errors) joined += "\n  " + e;
    throw ValidationError(joined);
  }
  return *outcome.circuit;
}

StateVector<> load_or_derive_witness(const CommonOptions& opts, const VerifierCircuit& circuit) {
  if (!opts.witness_path.empty()) {
    const auto witness = parse_witness(read_file(opts.witness_path));
    if (witness.renormalized)
      std::cerr << "warning: witness norm off by " << witness.norm_error
                << "; renormalized on load\n";
    return witness.state;
  }
  std::cerr << "note: no --witness given; using the spectral oracle's top witness\n";
  return brute_force_pmax(circuit).top_witness;
}

PromiseParameters promise_of(const CommonOptions& opts) {
  PromiseParameters params{opts.a, opts.b, opts.rounds};
  params.check();
  return params;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_circuit = true) {
  if (needs_circuit)
    cmd->add_option("--circuit", opts.circuit_path, "circuit JSON file")
        ->required()
        ->check(CLI::ExistingFile);
  cmd->add_option("--witness", opts.witness_path, "witness JSON file")->check(CLI::ExistingFile);
  cmd->add_option("--a", opts.a, "yes-case acceptance bound");
  cmd->add_option("--b", opts.b, "no-case acceptance bound");
  cmd->add_option("--r", opts.rounds, "repetition count r");
  cmd->add_option("--eps-pe", opts.eps_pe, "per-round phase estimation failure budget");
  cmd->add_option("--trials", opts.trials, "number of independent trials")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "master seed");
  cmd->add_option("--threads", opts.threads, "worker threads (default: QAMP_THREADS or hardware)");
  cmd->add_option("--out", opts.out_path, "output path (default: stdout)");
}

int run_amplify_fast(const CommonOptions& opts) {
  const auto circuit = load_circuit(opts.circuit_path);
  const auto witness = load_or_derive_witness(opts, circuit);
  const auto params = promise_of(opts);
  const double eps_pe = opts.eps_pe;

  const auto rows = run_parallel_trials(
      opts.trials, resolve_threads(opts.threads), opts.seed,
      [&](int, std::uint64_t seed) {
        RandomStream rng(seed);
        const auto decision = fast_amplify(circuit, witness, params, rng, eps_pe);
        TrialRow row;
        row.verdict = decision.verdict;
        row.stat = decision.median_folded;
        row.queries_v = decision.queries_v;
        row.queries_v_dag = decision.queries_v_dag;
        row.seed = seed;
        return row;
      });

  emit(opts.out_path, trials_to_csv(rows, "median_phi"));

  int accepts = 0;
  double mean_queries = 0;
  for (const auto& row : rows) {
    accepts += row.verdict == Verdict::Accept;
    mean_queries += static_cast<double>(row.queries_v);
  }
  std::cerr << "amplify-fast: " << accepts << "/" << rows.size() << " accepted, mean V queries "
            << mean_queries / rows.size() << "\n";
  return 0;
}

int run_amplify_mw(const CommonOptions& opts, int explicit_n) {
  const auto circuit = load_circuit(opts.circuit_path);
  const auto witness = load_or_derive_witness(opts, circuit);
  const auto params = promise_of(opts);
  const int num_measurements =
      explicit_n > 0 ? explicit_n
                     : static_cast<int>(plan_precision(params, opts.eps_pe).baseline_measurements);

  const auto rows = run_parallel_trials(
      opts.trials, resolve_threads(opts.threads), opts.seed,
      [&](int, std::uint64_t seed) {
        RandomStream rng(seed);
        const auto trace = alternating_measurements(circuit, witness, num_measurements, rng);
        TrialRow row;
        row.verdict = decide_from_trace(trace, params);
        row.stat = trace.transitions;
        row.queries_v = trace.queries_v;
        row.queries_v_dag = trace.queries_v_dag;
        row.seed = seed;
        return row;
      });

  emit(opts.out_path, trials_to_csv(rows, "transitions"));

  int accepts = 0;
  double mean_queries = 0;
  for (const auto& row : rows) {
    accepts += row.verdict == Verdict::Accept;
    mean_queries += static_cast<double>(row.queries_v);
  }
  std::cerr << "amplify-mw: " << accepts << "/" << rows.size() << " accepted with N="
            << num_measurements << ", mean V queries " << mean_queries / rows.size() << "\n";
  return 0;
}

int run_compare(const CommonOptions& opts, double anchor_a, std::vector<double> gaps) {
  if (gaps.empty()) gaps = {0.2, 0.1, 0.05, 0.02};
  std::string csv = "gap,a,b,r,n_bits,t_bits,walk_steps_per_round,fast_queries,mw_queries\n";
  for (const double gap : gaps) {
    PromiseParameters params{anchor_a, anchor_a - gap, opts.rounds};
    const auto plan = plan_precision(params, opts.eps_pe);
    csv += format_double(gap) + "," + format_double(params.a) + "," + format_double(params.b) +
           "," + std::to_string(params.rounds) + "," + std::to_string(plan.n_bits) + "," +
           std::to_string(plan.t_bits) + "," + std::to_string(plan.walk_steps_per_round) + "," +
           std::to_string(plan.total_walk_steps) + "," +
           std::to_string(plan.baseline_measurements) + "\n";
  }
  emit(opts.out_path, csv);
  return 0;
}

int run_decompose(const CommonOptions& opts) {
  const auto circuit = load_circuit(opts.circuit_path);
  emit(opts.out_path, decomposition_to_json(jordan_decompose(circuit)));
  return 0;
}

int run_oracle(const CommonOptions& opts) {
  const auto circuit = load_circuit(opts.circuit_path);
  const auto oracle = brute_force_pmax(circuit);
  std::cout << "pmax " << format_double(oracle.pmax) << "\n";
  if (!opts.out_path.empty()) {
    write_file(opts.out_path, serialize_witness(oracle.top_witness));
    std::cerr << "oracle: top witness written to " << opts.out_path << "\n";
  } else {
    std::cout << serialize_witness(oracle.top_witness);
  }
  return 0;
}

int run_prepare_witness(const CommonOptions& opts, int t_bits, int max_retries,
                        const std::string& report_path) {
  const auto circuit = load_circuit(opts.circuit_path);
  const auto params = promise_of(opts);
  RandomStream rng(derive_seed(opts.seed, 0));
  const auto outcome = prepare_witness(circuit, params, t_bits, max_retries, rng);

  std::string csv = "grid_numerator,grid_phi,attempt,stage\n";
  for (const auto& event : outcome.events) {
    const double phi = static_cast<double>(event.grid_numerator) / static_cast<double>(dim_of(t_bits));
    csv += std::to_string(event.grid_numerator) + "," + format_double(phi) + "," +
           std::to_string(event.attempt) + "," + event.stage + "\n";
  }
  if (!report_path.empty())
    write_file(report_path, csv);
  else
    std::cout << csv;

  if (!outcome.candidate) {
    std::cerr << "prepare-witness: retries exhausted across the phase grid\n";
    return 1;
  }
  std::cerr << "prepare-witness: candidate at grid phi " << outcome.candidate->grid_phi
            << " with estimated acceptance " << outcome.candidate->estimated_acceptance << "\n";
  if (!opts.out_path.empty()) write_file(opts.out_path, serialize_witness(outcome.candidate->witness));
  return 0;
}

int run_qma1(const CommonOptions& opts, std::uint64_t claim_numerator, int t_bits) {
  const auto circuit = load_circuit(opts.circuit_path);
  const auto witness = load_or_derive_witness(opts, circuit);
  const auto params = promise_of(opts);
  RandomStream rng(derive_seed(opts.seed, 0));
  const auto result = qma1_verify(circuit, witness, claim_numerator, t_bits, params, rng);
  if (!result.passed_probability_gate)
    std::cerr << "qma1: claim rejected at the probability gate\n";
  std::cout << verdict_name(result.verdict) << "\n";
  return 0;
}

int run_plant(const std::string& kind, int num_witness, int num_ancilla, std::uint64_t numerator,
              int t_bits, double b, double margin, std::uint64_t seed,
              const std::string& circuit_out, const std::string& witness_out) {
  PlantedInstance instance;
  if (kind == "dyadic") {
    instance = make_dyadic_phase_instance(num_witness, num_ancilla, numerator, t_bits, seed);
  } else if (kind == "commuting") {
    instance = make_commuting_instance(num_witness, num_ancilla, seed);
  } else if (kind == "no") {
    instance = make_no_instance(num_witness, num_ancilla, b, margin, seed);
  } else if (kind == "random") {
    instance = make_uniform_random_instance(num_witness, num_ancilla,
                                            3 * (num_witness + num_ancilla) + 5, seed);
  } else {
    throw ValidationError("unknown planted kind '" + kind + "'");
  }
  write_file(circuit_out, serialize_circuit(instance.circuit));
  if (!witness_out.empty()) write_file(witness_out, serialize_witness(instance.top_witness));
  std::cerr << "plant: known pmax " << format_double(instance.known_pmax) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amplified verification experiments for promise-gap circuits"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* fast = app.add_subcommand("amplify-fast", "phase-estimation amplification trials");
  add_common(fast, opts);

  auto* mw = app.add_subcommand("amplify-mw", "alternating-measurement baseline trials");
  add_common(mw, opts);
  int mw_n = 0;
  mw->add_option("--n", mw_n, "measurement count (default: ceil(2r/(a-b)^2))");

  auto* compare = app.add_subcommand("compare", "query-count table over a promise-gap sweep");
  add_common(compare, opts, /*needs_circuit=*/false);
  double anchor_a = 0.95;
  std::vector<double> gaps;
  compare->add_option("--anchor-a", anchor_a, "fixed a; each row uses b = a - gap");
  compare->add_option("--gaps", gaps, "gap values to sweep");

  auto* decompose = app.add_subcommand("decompose", "export the invariant-subspace decomposition");
  add_common(decompose, opts);

  auto* oracle = app.add_subcommand("oracle", "print pmax and optionally save the top witness");
  add_common(oracle, opts);

  auto* prep = app.add_subcommand("prepare-witness", "filter-state witness search");
  add_common(prep, opts);
  int prep_t = 6, prep_retries = 8;
  std::string prep_report;
  prep->add_option("--t", prep_t, "filter/phase register size");
  prep->add_option("--max-retries", prep_retries, "attempts per grid phase");
  prep->add_option("--report", prep_report, "event CSV path (default: stdout)");

  auto* qma1 = app.add_subcommand("qma1", "exact-phase one-sided verification");
  add_common(qma1, opts);
  std::uint64_t claim_numerator = 0;
  int claim_t = 3;
  qma1->add_option("--claim-num", claim_numerator, "claimed phase numerator j")->required();
  qma1->add_option("--t", claim_t, "claimed phase register size (phi = j / 2^t)");

  auto* plant = app.add_subcommand("plant", "generate planted test instances");
  std::string plant_kind = "dyadic", plant_circuit_out, plant_witness_out;
  int plant_n = 2, plant_m = 1, plant_t = 3;
  std::uint64_t plant_num = 1, plant_seed = 1;
  double plant_b = 0.5, plant_margin = 0.05;
  plant->add_option("--kind", plant_kind, "dyadic | commuting | no | random");
  plant->add_option("--n", plant_n, "witness qubits");
  plant->add_option("--m", plant_m, "ancilla qubits");
  plant->add_option("--num", plant_num, "dyadic numerator j");
  plant->add_option("--t", plant_t, "dyadic denominator bits (phi = j / 2^t)");
  plant->add_option("--b", plant_b, "no-instance bound b");
  plant->add_option("--margin", plant_margin, "no-instance margin below b");
  plant->add_option("--seed", plant_seed, "generator seed");
  plant->add_option("--out", plant_circuit_out, "circuit output path")->required();
  plant->add_option("--witness-out", plant_witness_out, "top witness output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (fast->parsed()) return run_amplify_fast(opts);
    if (mw->parsed()) return run_amplify_mw(opts, mw_n);
    if (compare->parsed()) return run_compare(opts, anchor_a, gaps);
    if (decompose->parsed()) return run_decompose(opts);
    if (oracle->parsed()) return run_oracle(opts);
    if (prep->parsed()) return run_prepare_witness(opts, prep_t, prep_retries, prep_report);
    if (qma1->parsed()) return run_qma1(opts, claim_numerator, claim_t);
    if (plant->parsed())
      return run_plant(plant_kind, plant_n, plant_m, plant_num, plant_t, plant_b, plant_margin,
                       plant_seed, plant_circuit_out, plant_witness_out);
  } catch (const GuardError& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
