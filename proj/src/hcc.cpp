#include "hcc/hcc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hcc/rng.hpp"

namespace hcc {

std::int64_t glo_fes(double do_value, std::int64_t tfes) {
  if (!(do_value >= 0.0 && do_value <= 1.0))
    throw std::invalid_argument("glo_fes: overlap degree must be in [0,1]");
  if (tfes <= 0) throw std::invalid_argument("glo_fes: budget must be positive");
  if (do_value == 0.0) return 0;
  double x = (0.2 + 0.8 * do_value) * static_cast<double>(tfes);
  const double snapped = std::nearbyint(x);
  if (std::abs(x - snapped) < 1e-6) x = snapped;
  return std::min<std::int64_t>(tfes, static_cast<std::int64_t>(std::floor(x)));
}

Vector blend_overlap(const Vector& prev_slice, const Vector& cur_slice,
                     double delta_prev, double delta_cur) {
  if (prev_slice.size() != cur_slice.size())
    throw std::invalid_argument("blend_overlap: slice length mismatch");
  if (delta_prev < 0.0 || delta_cur < 0.0)
    throw std::invalid_argument("blend_overlap: contributions must be non-negative");
  const double total = delta_prev + delta_cur;
  if (total <= 0.0) return 0.5 * (prev_slice + cur_slice);
  return (delta_prev * prev_slice + delta_cur * cur_slice) / total;
}

namespace {

// Counts every objective evaluation, keeps the historical best point, and
// samples the best-so-far curve at improvements and at a fixed stride.
class TracedObjective {
 public:
  TracedObjective(ObjectiveFn inner, std::int64_t stride)
      : inner_(std::move(inner)), stride_(stride > 0 ? stride : 0), next_sample_(stride_) {}

  double operator()(const Vector& x) {
    const double value = inner_(x);
    ++fes_;
    if (value < best_) {
      best_ = value;
      best_point_ = x;
      trace_.samples.push_back({fes_, best_});
    } else if (stride_ > 0 && fes_ >= next_sample_) {
      trace_.samples.push_back({fes_, best_});
    }
    if (stride_ > 0)
      while (next_sample_ <= fes_) next_sample_ += stride_;
    return value;
  }

  std::int64_t fes() const { return fes_; }
  double best() const { return best_; }
  const Vector& best_point() const { return best_point_; }
  RunTrace& trace() { return trace_; }

  void mark_phase(std::string label) { trace_.phase_marks.push_back({std::move(label), fes_}); }

 private:
  ObjectiveFn inner_;
  std::int64_t stride_;
  std::int64_t next_sample_;
  std::int64_t fes_ = 0;
  double best_ = std::numeric_limits<double>::infinity();
  Vector best_point_;
  RunTrace trace_;
};

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// positions of `values` inside the sorted group
std::vector<int> positions_in(const std::vector<int>& group, const std::vector<int>& values) {
  std::vector<int> pos;
  pos.reserve(values.size());
  for (int v : values) {
    const auto it = std::lower_bound(group.begin(), group.end(), v);
    pos.push_back(static_cast<int>(it - group.begin()));
  }
  return pos;
}

Vector gather(const Vector& full, const std::vector<int>& indices) {
  Vector out(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = full[indices[i]];
  return out;
}

void scatter(Vector& full, const std::vector<int>& indices, const Vector& values) {
  for (std::size_t i = 0; i < indices.size(); ++i)
    full[indices[i]] = values[static_cast<Eigen::Index>(i)];
}

HccResult finish(TracedObjective& traced,
                 std::chrono::steady_clock::time_point t0) {
  HccResult result;
  result.gbest = traced.best_point();
  result.gbest_value = traced.best();
  result.total_fes = traced.fes();
  if (traced.trace().samples.empty() || traced.trace().samples.back().fes != traced.fes())
    traced.trace().samples.push_back({traced.fes(), traced.best()});
  result.trace = std::move(traced.trace());
  result.trace.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

HccResult run_two_phase(const BoxProblem& problem, const Decomposition& decomp,
                        const HccConfig& cfg, bool with_global_phase) {
  if (problem.dim <= 0 || !problem.objective)
    throw std::invalid_argument("hcc: problem needs a dimension and an objective");
  if (decomp.dimension != problem.dim)
    throw std::invalid_argument("hcc: decomposition dimension mismatch");
  validate_cover(decomp);
  if (cfg.tfes <= 0) throw std::invalid_argument("hcc: budget must be positive");

  const OptimizeFn global_opt = cfg.global_optimizer ? cfg.global_optimizer : sep_cmaes_optimize;
  const OptimizeFn sub_opt = cfg.subspace_optimizer ? cfg.subspace_optimizer : cmaes_optimize;

  const auto t0 = std::chrono::steady_clock::now();
  TracedObjective traced(problem.objective, cfg.trace_stride);
  const ObjectiveFn counted = [&traced](const Vector& x) { return traced(x); };

  const int dim = problem.dim;
  const int m = static_cast<int>(decomp.groups.size());
  const auto& groups = decomp.groups;

  const double overlap_degree = degree_of_overlap(decomp, dim);
  const std::int64_t global_budget =
      with_global_phase ? glo_fes(overlap_degree, cfg.tfes) : 0;

  Vector gbest = Vector::Zero(dim);
  Vector omega = Vector::Zero(dim);  // full-dimension strategy mean

  if (global_budget > 0) traced.mark_phase("global");

  // one evaluation so the context value (and every later delta) is finite
  double gbest_value = counted(gbest);
  const auto reached_target = [&]() { return cfg.target && traced.best() <= *cfg.target; };

  if (global_budget > 0 && !reached_target()) {
    OptimizerConfig gc;
    gc.dim = dim;
    gc.mean0 = omega;
    gc.sigma0 = cfg.global_sigma0;
    gc.budget = std::min(global_budget, cfg.tfes - traced.fes());
    gc.stagnation_window = 0;  // the global phase runs its full share
    gc.lower = problem.lower;
    gc.upper = problem.upper;
    gc.target = cfg.target;
    gc.seed = mix_seed(cfg.seed, 0x676c6f62616cULL);
    const OptimizerRun run = global_opt(counted, gc);
    if (run.best_value < gbest_value) {
      gbest = run.best_point;
      gbest_value = run.best_value;
    }
    omega = run.final_mean;
  }

  // shared-variable index sets between consecutive groups, with positions
  // into each group's coordinate order
  std::vector<std::vector<int>> gamma(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> gamma_in_prev(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> gamma_in_cur(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) {
    gamma[i] = sorted_intersection(groups[i - 1], groups[i]);
    gamma_in_prev[i] = positions_in(groups[i - 1], gamma[i]);
    gamma_in_cur[i] = positions_in(groups[i], gamma[i]);
  }

  std::vector<Vector> sub_best(static_cast<std::size_t>(m));
  std::vector<Vector> sub_mean(static_cast<std::size_t>(m));
  std::vector<double> delta(static_cast<std::size_t>(m), 0.0);

  int round = 0;
  while (traced.fes() < cfg.tfes && !reached_target()) {
    const std::int64_t sub_share = (cfg.tfes - traced.fes()) / m;
    if (sub_share <= 0) break;
    traced.mark_phase("round");
    ++round;

    for (int i = 0; i < m && traced.fes() < cfg.tfes && !reached_target(); ++i) {
      const std::int64_t budget = std::min(sub_share, cfg.tfes - traced.fes());
      if (budget < 1) break;
      const auto& group = groups[static_cast<std::size_t>(i)];

      OptimizerConfig sc;
      sc.dim = static_cast<int>(group.size());
      sc.mean0 = gather(omega, group);
      sc.sigma0 = cfg.subspace_sigma0;
      sc.budget = budget;
      sc.stagnation_window = cfg.subspace_stagnation;
      sc.lower = problem.lower;
      sc.upper = problem.upper;
      sc.target = cfg.target;
      sc.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(round) * 0x10000ULL +
                                       static_cast<std::uint64_t>(i) + 1);

      const ObjectiveFn sub_objective = make_subspace_objective(counted, gbest, group);
      const OptimizerRun run = sub_opt(sub_objective, sc);

      const double value_before = gbest_value;
      if (run.best_value < gbest_value) {
        scatter(gbest, group, run.best_point);
        gbest_value = run.best_value;
      }
      delta[static_cast<std::size_t>(i)] = std::max(0.0, value_before - gbest_value);
      sub_best[static_cast<std::size_t>(i)] = run.best_point;
      sub_mean[static_cast<std::size_t>(i)] = run.final_mean;
      scatter(omega, group, run.final_mean);

      SubspaceRunInfo info;
      if (cfg.observer) {
        info.round = round;
        info.subspace = i;
        info.init_mean = sc.mean0;
        info.budget = budget;
        info.fes_used = run.fes_used;
        info.delta = delta[static_cast<std::size_t>(i)];
      }

      // couple the variables shared with the previously optimized group,
      // weighting each side by its latest contribution
      const bool can_blend = i > 0 && !gamma[static_cast<std::size_t>(i)].empty() &&
                             sub_best[static_cast<std::size_t>(i - 1)].size() != 0;
      if (can_blend && traced.fes() < cfg.tfes && !reached_target()) {
        const auto& shared = gamma[static_cast<std::size_t>(i)];
        const double d_prev = delta[static_cast<std::size_t>(i - 1)];
        const double d_cur = delta[static_cast<std::size_t>(i)];

        const Vector prev_best = gather(sub_best[static_cast<std::size_t>(i - 1)],
                                                  gamma_in_prev[static_cast<std::size_t>(i)]);
        const Vector cur_best = gather(sub_best[static_cast<std::size_t>(i)],
                                                 gamma_in_cur[static_cast<std::size_t>(i)]);
        const Vector blended_best = blend_overlap(prev_best, cur_best, d_prev, d_cur);

        const Vector prev_mean = gather(sub_mean[static_cast<std::size_t>(i - 1)],
                                                  gamma_in_prev[static_cast<std::size_t>(i)]);
        const Vector cur_mean = gather(sub_mean[static_cast<std::size_t>(i)],
                                                 gamma_in_cur[static_cast<std::size_t>(i)]);
        const Vector blended_mean = blend_overlap(prev_mean, cur_mean, d_prev, d_cur);

        if (cfg.observer) {
          info.blended = true;
          info.gbest_before_blend = gbest;
        }

        scatter(gbest, shared, blended_best);
        scatter(omega, shared, blended_mean);
        scatter(sub_best[static_cast<std::size_t>(i)],
                          gamma_in_cur[static_cast<std::size_t>(i)], blended_best);
        scatter(sub_mean[static_cast<std::size_t>(i)],
                          gamma_in_cur[static_cast<std::size_t>(i)], blended_mean);

        // re-evaluate so the stored context value stays truthful (1 FE)
        gbest_value = counted(gbest);

        if (cfg.observer) info.gbest_after_blend = gbest;
      }
      if (cfg.observer) cfg.observer(info);
    }
  }

  return finish(traced, t0);
}

}  // namespace

HccResult run_hcc(const BoxProblem& problem, const Decomposition& decomp,
                  const HccConfig& config) {
  return run_two_phase(problem, decomp, config, true);
}

HccResult run_cc(const BoxProblem& problem, const Decomposition& decomp,
                 const HccConfig& config) {
  return run_two_phase(problem, decomp, config, false);
}

HccResult run_nda(const BoxProblem& problem, const HccConfig& config) {
  if (problem.dim <= 0 || !problem.objective)
    throw std::invalid_argument("nda: problem needs a dimension and an objective");
  if (config.tfes <= 0) throw std::invalid_argument("nda: budget must be positive");

  const OptimizeFn global_opt =
      config.global_optimizer ? config.global_optimizer : sep_cmaes_optimize;

  const auto t0 = std::chrono::steady_clock::now();
  TracedObjective traced(problem.objective, config.trace_stride);
  const ObjectiveFn counted = [&traced](const Vector& x) { return traced(x); };

  traced.mark_phase("global");
  OptimizerConfig gc;
  gc.dim = problem.dim;
  gc.sigma0 = config.global_sigma0;
  gc.budget = config.tfes;
  gc.stagnation_window = 0;
  gc.lower = problem.lower;
  gc.upper = problem.upper;
  gc.target = config.target;
  gc.seed = mix_seed(config.seed, 0x676c6f62616cULL);
  global_opt(counted, gc);

  return finish(traced, t0);
}

}  // namespace hcc
