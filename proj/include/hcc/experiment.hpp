#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hcc/hcc.hpp"
#include "hcc/problem.hpp"

namespace hcc {

enum class AlgorithmId { Hcc, CcRddsm, CcRandom, NdaSep };

std::string to_string(AlgorithmId a);
AlgorithmId algorithm_from_string(const std::string& name);

enum class ExperimentScale { Full, Mini };

struct ProblemSelection {
  BaseFunction base = BaseFunction::Elliptic;
  int gamma_level = 1;
};

// "E3" = Elliptic under the third overlap preset, etc.
std::string problem_id(const ProblemSelection& sel);

struct ExperimentConfig {
  std::vector<ProblemSelection> suite;
  std::vector<AlgorithmId> algorithms;
  int runs = 25;
  std::int64_t tfes = 3'000'000;
  ExperimentScale scale = ExperimentScale::Full;
  std::uint64_t seed0 = 0;
  std::filesystem::path output_dir = "results";
  int workers = 0;  // 0 -> hardware concurrency; HCC_BENCH_WORKERS overrides
  std::int64_t trace_stride = 5'000;
};

// JSON mirror of ExperimentConfig, field for field: {"suite":[{"base":...,
// "gamma_level":...}], "algorithms":[...], "runs":..., "tfes":...,
// "scale":"full"|"mini", "seed0":..., "output_dir":..., "workers":...,
// "trace_stride":...}. Absent runs/tfes default to 25/3e6 at full scale and
// 5/1e5 at mini scale; mini caps tfes at 1e5 regardless.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Problem spec for a suite entry. Mini scale shrinks every block to a tenth
// (largest-remainder rounding so the dimension lands exactly on 100) and caps
// each overlap at one below the smaller adjacent block.
ProblemSpec make_problem_spec(const ProblemSelection& sel, ExperimentScale scale,
                              std::uint64_t instance_seed);
std::vector<int> mini_subspace_sizes();

// Run seeds are a pure function of (seed0, problem id, algorithm id, run
// index): splitmix64(seed0 ^ fnv1a64("problem|algorithm|run")).
std::uint64_t derive_seed(std::uint64_t seed0, const std::string& problem,
                          const std::string& algo, int run);

struct RunRecord {
  std::string problem;
  std::string algorithm;
  int run = 0;
  std::uint64_t seed = 0;
  double final_value = 0.0;
  std::int64_t fes = 0;
  double wall_time_s = 0.0;   // optimization only; generation and
                              // decomposition are not timed
  double acc = -1.0;          // decomposition accuracy, -1 when not applicable
  std::string status = "ok";  // "ok" or the failure reason
};

struct ResultRow {
  std::string problem;
  std::string algorithm;
  int runs = 0;
  int failed = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double median_value = 0.0;
  double time_mean_s = 0.0;
  double acc_mean = -1.0;
  double p_vs_reference = -1.0;  // -1 when no reference comparison applies
  char verdict = ' ';
  std::vector<double> final_values;
};

// Executes the full matrix (problems x algorithms x runs), persisting
// traces/<problem>/<algo>/run<k>.csv (+ _phases.csv sidecars), runs.csv,
// summary.csv, summary.txt and curves/<problem>_<algo>_median.csv under the
// output directory. Failed runs are recorded with their status, never
// dropped. Decomposition evaluations are free (ground-truth structure);
// wall time covers the optimization call only.
void run_experiment(const ExperimentConfig& config);

// Aggregation and reporting, exposed separately so `report` can re-emit from
// persisted runs.csv + traces.
std::vector<ResultRow> summarize(const std::vector<RunRecord>& records,
                                 const std::string& reference_algo);
void emit_report(const std::vector<ResultRow>& rows, const std::filesystem::path& dir);
void write_runs_csv(const std::vector<RunRecord>& records, const std::filesystem::path& dir);
std::vector<RunRecord> load_runs_csv(const std::filesystem::path& dir);
void write_median_curves(const std::vector<RunRecord>& records,
                         const std::filesystem::path& dir, std::int64_t stride);

// Pointwise median of best-so-far staircase curves on a regular fes grid.
std::vector<TracePoint> median_curve(const std::vector<std::vector<TracePoint>>& runs,
                                     std::int64_t stride);

}  // namespace hcc
