#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "hcc/dsm.hpp"
#include "hcc/types.hpp"

namespace hcc {

// Ordered list of variable groups covering 0..dimension-1. Groups are sorted
// ascending internally, contain no duplicates, and may overlap each other.
struct Decomposition {
  int dimension = 0;
  std::vector<std::vector<int>> groups;
};

// Throws std::invalid_argument unless every index in 0..dimension-1 appears
// in at least one group and all indices are in range.
void validate_cover(const Decomposition& d);

// Recursive decomposition of the interaction matrix. Every emitted group
// induces an all-1 principal submatrix; exact duplicates are removed, and by
// default groups that are strict subsets of other groups are pruned as well.
// Output order is canonical: groups sorted ascending internally, then
// lexicographically. Throws on non-symmetric or zero-diagonal input.
Decomposition rddsm(const DesignStructureMatrix& theta, bool prune_subsets = true);

// Best-match recovery of the true groups, normalized by the total size of the
// true groups (equal to the dimension when the truth is disjoint) so that a
// perfect recovery scores 1 even when the true groups overlap.
double accuracy(const Decomposition& found, const Decomposition& truth, int dimension);

// Fraction of variables that belong to two or more groups.
double degree_of_overlap(const Decomposition& d, int dimension);

// Random permutation of 0..dimension-1 split into k contiguous chunks of
// size dimension/k; any remainder is absorbed by the last group.
Decomposition random_decomposition(int dimension, int k, std::uint64_t seed);

struct IdealityReport {
  bool groups_fully_interacting = false;  // every group induces an all-1 submatrix
  bool interactions_covered = false;      // every linked pair shares some group
};
IdealityReport is_ideal_decomposition(const Decomposition& d, const DesignStructureMatrix& theta);

// Single-point finite-difference witness: true iff the cross difference
// |(f(x0+d e_p+d e_q) - f(x0+d e_q)) - (f(x0+d e_p) - f(x0))| exceeds tol.
// Costs 4 evaluations, or 3 when f(x0) is supplied by the caller.
bool detect_interaction(const ObjectiveFn& f, int p, int q, const Vector& x0,
                        double delta, double tol, std::optional<double> f_x0 = {});

double default_interaction_tol(double f_x0);

// Text format: one group per line, space-separated ascending indices.
void save_decomposition(const Decomposition& d, const std::filesystem::path& path);
Decomposition load_decomposition(const std::filesystem::path& path, int dimension);

}  // namespace hcc
