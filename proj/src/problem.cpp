#include "hcc/problem.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hcc/rng.hpp"
#include "hcc/transforms.hpp"

namespace hcc {

int ProblemSpec::dimension() const {
  return std::accumulate(subspace_sizes.begin(), subspace_sizes.end(), 0);
}

void ProblemSpec::validate() const {
  if (subspace_sizes.empty()) throw std::invalid_argument("spec: no subspace sizes");
  for (int s : subspace_sizes)
    if (s <= 0) throw std::invalid_argument("spec: subspace sizes must be positive");
  if (overlaps.size() + 1 != subspace_sizes.size())
    throw std::invalid_argument("spec: need one overlap per block boundary");
  for (std::size_t i = 0; i < overlaps.size(); ++i) {
    if (overlaps[i] < 0) throw std::invalid_argument("spec: overlaps must be non-negative");
    // strict: an overlap reaching a full adjacent block would chain windows
    // across non-consecutive blocks
    const int cap = std::min(subspace_sizes[i], subspace_sizes[i + 1]);
    if (overlaps[i] >= cap)
      throw std::invalid_argument("spec: overlap " + std::to_string(overlaps[i]) +
                                  " at boundary " + std::to_string(i) +
                                  " must be smaller than both adjacent blocks");
  }
  if (!(lower < upper)) throw std::invalid_argument("spec: lower bound must be below upper");
  if (base == BaseFunction::Elliptic) {
    for (int s : subspace_sizes)
      if (s < 2) throw std::invalid_argument("spec: elliptic blocks need size >= 2");
  }
}

std::vector<int> default_subspace_sizes() {
  return {50, 50, 25, 25, 100, 100, 25, 25, 50, 25, 100, 25, 100, 50, 25, 25, 25, 100, 50, 25};
}

std::vector<int> gamma_preset(int level, int boundaries) {
  static constexpr int kOverlap[6] = {0, 1, 3, 5, 7, 10};
  if (level < 1 || level > 6)
    throw std::invalid_argument("gamma_preset: level must be in 1..6");
  return std::vector<int>(boundaries, kOverlap[level - 1]);
}

ProblemInstance generate_instance(const ProblemSpec& spec) {
  spec.validate();
  const int d = spec.dimension();
  const int m = static_cast<int>(spec.subspace_sizes.size());
  Rng rng(spec.seed);

  ProblemInstance inst;
  inst.spec = spec;

  inst.permutation.resize(d);
  std::iota(inst.permutation.begin(), inst.permutation.end(), 0);
  for (int i = d - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(inst.permutation[i], inst.permutation[j]);
  }

  std::vector<int> prefix(m + 1, 0);
  for (int i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + spec.subspace_sizes[i];
  inst.subspaces.resize(m);
  for (int i = 0; i < m; ++i) {
    const int begin = prefix[i] - (i > 0 ? spec.overlaps[i - 1] : 0);
    const int end = prefix[i + 1];
    inst.subspaces[i].assign(inst.permutation.begin() + begin, inst.permutation.begin() + end);
  }

  // optimum kept in the inner 80% of the box
  const double center = 0.5 * (spec.lower + spec.upper);
  const double half = 0.5 * (spec.upper - spec.lower);
  inst.shift.resize(d);
  for (int i = 0; i < d; ++i)
    inst.shift[i] = center + 0.8 * half * rng.uniform(-1.0, 1.0);

  inst.weights.resize(m);
  for (int i = 0; i < m; ++i) inst.weights[i] = std::pow(10.0, 3.0 * rng.normal());

  inst.rotations.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int s = static_cast<int>(inst.subspaces[i].size());
    Matrix gauss(s, s);
    for (int c = 0; c < s; ++c)
      for (int r = 0; r < s; ++r) gauss(r, c) = rng.normal();
    Eigen::HouseholderQR<Matrix> qr(gauss);
    Matrix q = qr.householderQ();
    // sign-correct the columns so the distribution is uniform over the
    // orthogonal group
    Matrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < s; ++c)
      if (rmat(c, c) < 0.0) q.col(c) = -q.col(c);
    inst.rotations.push_back(std::move(q));
  }

  return inst;
}

void validate_instance(const ProblemInstance& inst) {
  inst.spec.validate();
  const int d = inst.dimension();
  const int m = static_cast<int>(inst.spec.subspace_sizes.size());

  if (static_cast<int>(inst.permutation.size()) != d)
    throw std::invalid_argument("instance: permutation length mismatch");
  {
    std::vector<int> sorted = inst.permutation;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < d; ++i)
      if (sorted[i] != i) throw std::invalid_argument("instance: permutation is not a bijection");
  }

  if (static_cast<int>(inst.subspaces.size()) != m)
    throw std::invalid_argument("instance: subspace count mismatch");
  for (int i = 0; i < m; ++i) {
    const int expected =
        inst.spec.subspace_sizes[i] + (i > 0 ? inst.spec.overlaps[i - 1] : 0);
    if (static_cast<int>(inst.subspaces[i].size()) != expected)
      throw std::invalid_argument("instance: subspace " + std::to_string(i) + " has wrong size");
  }

  std::vector<char> covered(d, 0);
  for (const auto& group : inst.subspaces)
    for (int v : group) {
      if (v < 0 || v >= d) throw std::invalid_argument("instance: subspace index out of range");
      covered[v] = 1;
    }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw std::invalid_argument("instance: subspaces do not cover every variable");

  // consecutive subspaces share exactly the declared overlap; others are disjoint
  std::vector<std::vector<int>> sorted(m);
  for (int i = 0; i < m; ++i) {
    sorted[i] = inst.subspaces[i];
    std::sort(sorted[i].begin(), sorted[i].end());
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> common;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                            sorted[j].end(), std::back_inserter(common));
      const std::size_t expected =
          (j == i + 1) ? static_cast<std::size_t>(inst.spec.overlaps[i]) : 0u;
      if (common.size() != expected)
        throw std::invalid_argument("instance: overlap between subspaces " + std::to_string(i) +
                                    " and " + std::to_string(j) + " has wrong cardinality");
    }

  if (inst.shift.size() != d)
    throw std::invalid_argument("instance: shift length mismatch");
  for (int i = 0; i < d; ++i)
    if (!(inst.shift[i] > inst.spec.lower && inst.shift[i] < inst.spec.upper))
      throw std::invalid_argument("instance: shift not strictly inside the bounds");

  if (inst.weights.size() != m)
    throw std::invalid_argument("instance: weight count mismatch");
  for (int i = 0; i < m; ++i)
    if (!(inst.weights[i] > 0.0)) throw std::invalid_argument("instance: weights must be positive");

  if (static_cast<int>(inst.rotations.size()) != m)
    throw std::invalid_argument("instance: rotation count mismatch");
  for (int i = 0; i < m; ++i) {
    const auto s = static_cast<Eigen::Index>(inst.subspaces[i].size());
    const Matrix& r = inst.rotations[i];
    if (r.rows() != s || r.cols() != s)
      throw std::invalid_argument("instance: rotation " + std::to_string(i) + " has wrong shape");
    const double err = (r.transpose() * r - Matrix::Identity(s, s)).cwiseAbs().maxCoeff();
    if (!(err < 1e-9))
      throw std::invalid_argument("instance: rotation " + std::to_string(i) + " is not orthogonal");
  }
}

double evaluate(const ProblemInstance& inst, const Vector& x) {
  const int d = inst.dimension();
  if (x.size() != d) throw std::invalid_argument("evaluate: point has wrong dimension");

  const Vector y = x - inst.shift;
  double total = 0.0;
  for (std::size_t i = 0; i < inst.subspaces.size(); ++i) {
    const auto& group = inst.subspaces[i];
    Vector yi(group.size());
    for (std::size_t j = 0; j < group.size(); ++j) yi[static_cast<Eigen::Index>(j)] = y[group[j]];
    const Vector zi = t_asy(t_osz(inst.rotations[i] * yi), 0.2);
    total += inst.weights[i] * evaluate_base(inst.spec.base, zi);
  }
  return total;
}

bool in_bounds(const ProblemSpec& spec, const Vector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] < spec.lower || x[i] > spec.upper) return false;
  return true;
}

DesignStructureMatrix ground_truth_theta(const ProblemInstance& inst) {
  DesignStructureMatrix theta(inst.dimension());
  for (const auto& group : inst.subspaces)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b) theta.link(group[a], group[b]);
  return theta;
}

Decomposition true_subspaces(const ProblemInstance& inst) {
  Decomposition d;
  d.dimension = inst.dimension();
  d.groups.reserve(inst.subspaces.size());
  for (const auto& group : inst.subspaces) {
    std::vector<int> g = group;
    std::sort(g.begin(), g.end());
    d.groups.push_back(std::move(g));
  }
  return d;
}

}  // namespace hcc
