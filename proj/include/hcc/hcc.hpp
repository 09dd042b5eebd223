#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcc/decomposition.hpp"
#include "hcc/optimizers.hpp"

namespace hcc {

struct BoxProblem {
  ObjectiveFn objective;
  int dim = 0;
  double lower = -100.0;
  double upper = 100.0;
};

struct TracePoint {
  std::int64_t fes = 0;
  double best = 0.0;
};

struct PhaseMark {
  std::string phase;
  std::int64_t fes = 0;
};

// Best-so-far convergence curve with evaluation accounting. Samples are
// recorded at every improvement and every trace_stride evaluations; the
// best values are non-increasing in fes by construction.
struct RunTrace {
  std::vector<TracePoint> samples;
  std::vector<PhaseMark> phase_marks;
  double wall_time_s = 0.0;
};

// Observer payload for one subspace optimization round (test/diagnostic hook).
struct SubspaceRunInfo {
  int round = 0;
  int subspace = 0;
  Vector init_mean;             // warm-start mean handed to the optimizer
  std::int64_t budget = 0;
  std::int64_t fes_used = 0;
  double delta = 0.0;           // improvement credited to this subspace
  bool blended = false;
  Vector gbest_before_blend;    // filled only when blending fired
  Vector gbest_after_blend;
};

using OptimizeFn = std::function<OptimizerRun(const ObjectiveFn&, const OptimizerConfig&)>;

struct HccConfig {
  std::int64_t tfes = 3'000'000;
  std::optional<double> target;
  double global_sigma0 = 0.5;
  double subspace_sigma0 = 0.5;
  int subspace_stagnation = 100;
  std::int64_t trace_stride = 5'000;
  std::uint64_t seed = 0;
  OptimizeFn global_optimizer;    // empty -> sep_cmaes_optimize
  OptimizeFn subspace_optimizer;  // empty -> cmaes_optimize
  std::function<void(const SubspaceRunInfo&)> observer;
};

struct HccResult {
  Vector gbest;              // historically best point seen by any evaluation
  double gbest_value = 0.0;
  std::int64_t total_fes = 0;
  RunTrace trace;
};

// Global-phase budget as a function of the degree of overlap: zero when the
// decomposition is disjoint, otherwise floor((0.2 + 0.8*do) * tfes). The
// product is snapped to the nearest integer within 1e-6 before flooring so
// decimal overlap ratios are not pushed down by binary rounding.
std::int64_t glo_fes(double do_value, std::int64_t tfes);

// Contribution-weighted coupling of the values two subspaces assign to their
// shared variables: (dp*prev + dc*cur) / (dp + dc), falling back to the plain
// mean when both contributions are zero. Slices must have equal length and
// contributions must be non-negative.
Vector blend_overlap(const Vector& prev_slice, const Vector& cur_slice,
                     double delta_prev, double delta_cur);

// Two-phase run: a global optimizer spends glo_fes(DO, tfes) evaluations and
// warm-starts the mean, then the cooperative loop optimizes each group in
// turn against the shared context, accepting improvements and blending the
// variables shared with the previously optimized group.
HccResult run_hcc(const BoxProblem& problem, const Decomposition& decomp, const HccConfig& config);

// Same loop with the global phase forced off (pure cooperative baseline);
// blending still applies.
HccResult run_cc(const BoxProblem& problem, const Decomposition& decomp, const HccConfig& config);

// Single whole-space run of the global-phase optimizer with the full budget.
HccResult run_nda(const BoxProblem& problem, const HccConfig& config);

}  // namespace hcc
