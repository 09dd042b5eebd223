#include "hcc/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hcc/rng.hpp"

namespace hcc {

int default_lambda(int dim) {
  if (dim < 1) throw std::invalid_argument("default_lambda: dimension must be positive");
  return 4 + 3 * static_cast<int>(std::ceil(std::log(static_cast<double>(dim))));
}

namespace {

// Selection weights and constants shared by both covariance models
// (Hansen's published defaults: log-rank weights, cumulative step-size
// adaptation, rank-1 + rank-mu covariance update).
struct StrategyConstants {
  int n = 0;
  int lambda = 0;
  int mu = 0;
  Vector weights;  // mu entries, sum 1
  double mueff = 0.0;
  double csigma = 0.0;
  double dsigma = 0.0;
  double cc = 0.0;
  double c1 = 0.0;
  double cmu = 0.0;
  double chin = 0.0;

  StrategyConstants(int n_, int lambda_, bool separable) : n(n_), lambda(lambda_) {
    mu = lambda / 2;
    weights.resize(mu);
    for (int i = 0; i < mu; ++i)
      weights[i] = std::log((lambda + 1) / 2.0) - std::log(i + 1.0);
    weights /= weights.sum();
    mueff = 1.0 / weights.squaredNorm();

    const double nd = static_cast<double>(n);
    csigma = (mueff + 2.0) / (nd + mueff + 5.0);
    dsigma = 1.0 + 2.0 * std::max(0.0, std::sqrt((mueff - 1.0) / (nd + 1.0)) - 1.0) + csigma;
    cc = (4.0 + mueff / nd) / (nd + 4.0 + 2.0 * mueff / nd);
    c1 = 2.0 / ((nd + 1.3) * (nd + 1.3) + mueff);
    cmu = std::min(1.0 - c1, 2.0 * (mueff - 2.0 + 1.0 / mueff) / ((nd + 2.0) * (nd + 2.0) + mueff));
    if (separable) {
      // diagonal model learns each axis independently; scale the rates up
      c1 = std::min(1.0, c1 * (nd + 2.0) / 3.0);
      cmu = std::min(1.0 - c1, cmu * (nd + 2.0) / 3.0);
    }
    chin = std::sqrt(nd) * (1.0 - 1.0 / (4.0 * nd) + 1.0 / (21.0 * nd * nd));
  }
};

class FullCovarianceModel {
 public:
  FullCovarianceModel(const StrategyConstants& k, const Vector& mean0, double sigma0)
      : k_(k),
        mean_(mean0),
        sigma_(sigma0),
        psigma_(Vector::Zero(k.n)),
        pc_(Vector::Zero(k.n)),
        cov_(Matrix::Identity(k.n, k.n)),
        basis_(Matrix::Identity(k.n, k.n)),
        scales_(Vector::Ones(k.n)) {
    // eigendecomposition refresh cadence, in generations
    refresh_every_ =
        std::max(1, static_cast<int>(std::floor(1.0 / ((k_.c1 + k_.cmu) * k_.n * 10.0))));
  }

  const Vector& mean() const { return mean_; }
  double sigma() const { return sigma_; }
  double min_scale() const { return sigma_ * scales_.minCoeff(); }
  double max_scale() const { return sigma_ * scales_.maxCoeff(); }

  Vector sample_step(Rng& rng) const {
    Vector z(k_.n);
    for (int i = 0; i < k_.n; ++i) z[i] = rng.normal();
    const Vector step = scales_.cwiseProduct(z);
    return basis_ * step;
  }

  void update(const std::vector<const Vector*>& selected) {
    const Vector old_mean = mean_;
    mean_.setZero();
    for (int i = 0; i < k_.mu; ++i) mean_ += k_.weights[i] * (*selected[i]);

    const Vector delta = (mean_ - old_mean) / sigma_;
    Vector rotated = basis_.transpose() * delta;
    rotated = rotated.cwiseQuotient(scales_);
    const Vector cinv_delta = basis_ * rotated;

    psigma_ = (1.0 - k_.csigma) * psigma_ +
              std::sqrt(k_.csigma * (2.0 - k_.csigma) * k_.mueff) * cinv_delta;

    ++generation_;
    const double ps_norm = psigma_.norm();
    const double expected =
        std::sqrt(1.0 - std::pow(1.0 - k_.csigma, 2.0 * generation_)) * k_.chin;
    const bool hsigma = ps_norm / expected < 1.4 + 2.0 / (k_.n + 1.0);

    pc_ = (1.0 - k_.cc) * pc_;
    if (hsigma) pc_ += std::sqrt(k_.cc * (2.0 - k_.cc) * k_.mueff) * delta;

    const double c1a = k_.c1 * (hsigma ? 1.0 : 1.0 - k_.cc * (2.0 - k_.cc));
    cov_ *= 1.0 - c1a - k_.cmu;
    cov_ += k_.c1 * (pc_ * pc_.transpose());
    for (int i = 0; i < k_.mu; ++i) {
      const Vector y = (*selected[i] - old_mean) / sigma_;
      cov_ += (k_.cmu * k_.weights[i]) * (y * y.transpose());
    }

    sigma_ *= std::exp((k_.csigma / k_.dsigma) * (ps_norm / k_.chin - 1.0));

    if (generation_ % refresh_every_ == 0) refresh_eigensystem();
  }

 private:
  void refresh_eigensystem() {
    cov_ = 0.5 * (cov_ + cov_.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(cov_);
    basis_ = eig.eigenvectors();
    Vector vals = eig.eigenvalues();
    const double floor_val = std::max(vals.maxCoeff(), 1e-30) * 1e-18;
    scales_ = vals.cwiseMax(floor_val).cwiseSqrt();
  }

  const StrategyConstants& k_;
  Vector mean_;
  double sigma_;
  Vector psigma_;
  Vector pc_;
  Matrix cov_;
  Matrix basis_;   // eigenvectors
  Vector scales_;  // sqrt eigenvalues
  std::int64_t generation_ = 0;
  int refresh_every_ = 1;
};

class DiagonalCovarianceModel {
 public:
  DiagonalCovarianceModel(const StrategyConstants& k, const Vector& mean0, double sigma0)
      : k_(k),
        mean_(mean0),
        sigma_(sigma0),
        psigma_(Vector::Zero(k.n)),
        pc_(Vector::Zero(k.n)),
        variances_(Vector::Ones(k.n)),
        scales_(Vector::Ones(k.n)) {}

  const Vector& mean() const { return mean_; }
  double sigma() const { return sigma_; }
  double min_scale() const { return sigma_ * scales_.minCoeff(); }
  double max_scale() const { return sigma_ * scales_.maxCoeff(); }

  Vector sample_step(Rng& rng) const {
    Vector y(k_.n);
    for (int i = 0; i < k_.n; ++i) y[i] = scales_[i] * rng.normal();
    return y;
  }

  void update(const std::vector<const Vector*>& selected) {
    const Vector old_mean = mean_;
    mean_.setZero();
    for (int i = 0; i < k_.mu; ++i) mean_ += k_.weights[i] * (*selected[i]);

    const Vector delta = (mean_ - old_mean) / sigma_;
    const Vector cinv_delta = delta.cwiseQuotient(scales_);

    psigma_ = (1.0 - k_.csigma) * psigma_ +
              std::sqrt(k_.csigma * (2.0 - k_.csigma) * k_.mueff) * cinv_delta;

    ++generation_;
    const double ps_norm = psigma_.norm();
    const double expected =
        std::sqrt(1.0 - std::pow(1.0 - k_.csigma, 2.0 * generation_)) * k_.chin;
    const bool hsigma = ps_norm / expected < 1.4 + 2.0 / (k_.n + 1.0);

    pc_ = (1.0 - k_.cc) * pc_;
    if (hsigma) pc_ += std::sqrt(k_.cc * (2.0 - k_.cc) * k_.mueff) * delta;

    const double c1a = k_.c1 * (hsigma ? 1.0 : 1.0 - k_.cc * (2.0 - k_.cc));
    variances_ *= 1.0 - c1a - k_.cmu;
    variances_ += k_.c1 * pc_.cwiseProduct(pc_);
    for (int i = 0; i < k_.mu; ++i) {
      const Vector y = (*selected[i] - old_mean) / sigma_;
      variances_ += (k_.cmu * k_.weights[i]) * y.cwiseProduct(y);
    }
    variances_ = variances_.cwiseMax(1e-300);
    scales_ = variances_.cwiseSqrt();

    sigma_ *= std::exp((k_.csigma / k_.dsigma) * (ps_norm / k_.chin - 1.0));
  }

 private:
  const StrategyConstants& k_;
  Vector mean_;
  double sigma_;
  Vector psigma_;
  Vector pc_;
  Vector variances_;
  Vector scales_;
  std::int64_t generation_ = 0;
};

template <class Model>
OptimizerRun run_strategy(const ObjectiveFn& objective, const OptimizerConfig& cfg,
                          bool separable) {
  if (cfg.dim < 1) throw std::invalid_argument("optimizer: dimension must be positive");
  if (!(cfg.sigma0 > 0.0)) throw std::invalid_argument("optimizer: sigma0 must be positive");
  if (cfg.budget < 1) throw std::invalid_argument("optimizer: budget must be positive");
  if (cfg.lower >= cfg.upper) throw std::invalid_argument("optimizer: empty box");

  const int lambda = cfg.lambda > 0 ? cfg.lambda : default_lambda(cfg.dim);
  if (lambda < 2) throw std::invalid_argument("optimizer: population must be >= 2");

  Vector mean0 = cfg.mean0.size() ? cfg.mean0 : Vector::Zero(cfg.dim);
  if (mean0.size() != cfg.dim) throw std::invalid_argument("optimizer: mean0 dimension mismatch");

  const StrategyConstants constants(cfg.dim, lambda, separable);
  Model model(constants, mean0, cfg.sigma0);
  Rng rng(cfg.seed);

  OptimizerRun run;
  run.best_value = std::numeric_limits<double>::infinity();
  std::int64_t fes = 0;
  std::int64_t generation = 0;
  int since_improvement = 0;
  bool stop = false;
  StopReason reason = StopReason::Budget;

  std::vector<Vector> points(static_cast<std::size_t>(lambda));
  std::vector<double> values(static_cast<std::size_t>(lambda));
  std::vector<int> order(static_cast<std::size_t>(lambda));

  while (!stop && fes < cfg.budget) {
    const int count = static_cast<int>(std::min<std::int64_t>(lambda, cfg.budget - fes));
    int evaluated = 0;
    for (int k = 0; k < count && !stop; ++k) {
      Vector x = model.mean() + model.sigma() * model.sample_step(rng);
      x = x.cwiseMax(cfg.lower).cwiseMin(cfg.upper);
      const double value = objective(x);
      if (!std::isfinite(value))
        throw std::runtime_error("optimizer: objective returned a non-finite value");
      ++fes;
      ++evaluated;
      points[static_cast<std::size_t>(k)] = std::move(x);
      values[static_cast<std::size_t>(k)] = value;

      if (value < run.best_value) {
        run.best_value = value;
        run.best_point = points[static_cast<std::size_t>(k)];
        since_improvement = 0;
      } else {
        ++since_improvement;
      }

      if (cfg.target && run.best_value <= *cfg.target) {
        stop = true;
        reason = StopReason::Target;
      } else if (cfg.stagnation_window > 0 && since_improvement >= cfg.stagnation_window) {
        stop = true;
        reason = StopReason::Stagnation;
      }
    }

    // adapt only on fully evaluated generations; a trailing partial
    // generation is sample-and-rank only, keeping the budget exact
    if (!stop && evaluated == lambda) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return values[static_cast<std::size_t>(a)] <
                                                  values[static_cast<std::size_t>(b)]; });
      std::vector<const Vector*> selected(static_cast<std::size_t>(constants.mu));
      for (int i = 0; i < constants.mu; ++i)
        selected[static_cast<std::size_t>(i)] =
            &points[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
      model.update(selected);
      ++generation;
      if (cfg.on_generation) {
        GenerationStats stats;
        stats.generation = generation;
        stats.best_value = run.best_value;
        stats.sigma = model.sigma();
        stats.min_scale = model.min_scale();
        stats.max_scale = model.max_scale();
        cfg.on_generation(stats);
      }
    }
  }

  run.fes_used = fes;
  run.final_mean = model.mean();
  run.stopped_by = stop ? reason : StopReason::Budget;
  return run;
}

}  // namespace

OptimizerRun cmaes_optimize(const ObjectiveFn& objective, const OptimizerConfig& config) {
  return run_strategy<FullCovarianceModel>(objective, config, false);
}

OptimizerRun sep_cmaes_optimize(const ObjectiveFn& objective, const OptimizerConfig& config) {
  return run_strategy<DiagonalCovarianceModel>(objective, config, true);
}

ObjectiveFn make_subspace_objective(ObjectiveFn full, Vector context, std::vector<int> indices) {
  for (int v : indices)
    if (v < 0 || v >= context.size())
      throw std::invalid_argument("make_subspace_objective: index out of range");
  // the scratch point differs from the context only at `indices`, which every
  // call overwrites, so no restore pass is needed
  return [full = std::move(full), scratch = std::move(context),
          indices = std::move(indices)](const Vector& v) mutable {
    if (v.size() != static_cast<Eigen::Index>(indices.size()))
      throw std::invalid_argument("subspace objective: wrong argument dimension");
    for (std::size_t i = 0; i < indices.size(); ++i)
      scratch[indices[i]] = v[static_cast<Eigen::Index>(i)];
    return full(scratch);
  };
}

}  // namespace hcc
