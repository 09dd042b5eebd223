#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "hcc/types.hpp"

namespace hcc {

enum class StopReason { Budget, Stagnation, Target };

// Per-generation snapshot, delivered after each full strategy update.
struct GenerationStats {
  std::int64_t generation = 0;
  double best_value = 0.0;  // best of the run so far
  double sigma = 0.0;
  double min_scale = 0.0;   // smallest / largest axis scale of the sampling
  double max_scale = 0.0;   // distribution (sqrt of covariance eigenvalues)
};

struct OptimizerConfig {
  int dim = 0;
  Vector mean0;                  // empty -> zero vector
  double sigma0 = 0.5;
  int lambda = 0;                // 0 -> default_lambda(dim)
  std::int64_t budget = 0;       // max function evaluations, exact
  int stagnation_window = 100;   // consecutive non-improving individuals
                                 // before stopping; 0 disables the check
  double lower = -100.0;
  double upper = 100.0;
  std::optional<double> target;  // stop once best <= target
  std::uint64_t seed = 0;
  std::function<void(const GenerationStats&)> on_generation;
};

struct OptimizerRun {
  Vector best_point;
  double best_value = 0.0;  // objective value of best_point as evaluated
  Vector final_mean;
  std::int64_t fes_used = 0;
  StopReason stopped_by = StopReason::Budget;
};

// 4 + 3*ceil(ln dim)
int default_lambda(int dim);

// Covariance-matrix-adaptation evolution strategy with the standard published
// parameter defaults (rank-1 plus rank-mu update, cumulative step-size
// adaptation). Samples are clamped to the box before evaluation and the
// clamped points feed the update. If the remaining budget is smaller than the
// population, a final partial generation is sampled and evaluated but the
// strategy state is not updated, so fes_used matches the budget exactly.
OptimizerRun cmaes_optimize(const ObjectiveFn& objective, const OptimizerConfig& config);

// Diagonal-covariance variant: cost per sample is linear in the dimension and
// the covariance learning rates are scaled up by (dim + 2)/3, making it
// usable as a full-dimension optimizer at dim ~ 1000.
OptimizerRun sep_cmaes_optimize(const ObjectiveFn& objective, const OptimizerConfig& config);

// Wraps a full-space objective so an optimizer over `indices` evaluates its
// candidates embedded at those positions of a fixed context point. Each call
// costs exactly one evaluation of the full objective.
ObjectiveFn make_subspace_objective(ObjectiveFn full, Vector context, std::vector<int> indices);

}  // namespace hcc
