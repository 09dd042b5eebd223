#pragma once

#include <cstdint>
#include <vector>

#include "hcc/base_functions.hpp"
#include "hcc/decomposition.hpp"
#include "hcc/dsm.hpp"
#include "hcc/types.hpp"

namespace hcc {

struct ProblemSpec {
  BaseFunction base = BaseFunction::Elliptic;
  std::vector<int> subspace_sizes;  // block sizes; their sum is the dimension
  std::vector<int> overlaps;        // shared variables between consecutive blocks,
                                    // size |subspace_sizes| - 1
  double lower = -100.0;
  double upper = 100.0;
  std::uint64_t seed = 0;

  int dimension() const;
  void validate() const;  // throws std::invalid_argument
};

// The canonical 20-block composition summing to 1000.
std::vector<int> default_subspace_sizes();

// Overlap presets: levels 1..6 give 0, 1, 3, 5, 7, 10 shared variables per
// block boundary.
std::vector<int> gamma_preset(int level, int boundaries = 19);

struct ProblemInstance {
  ProblemSpec spec;
  std::vector<int> permutation;             // bijection on 0..D-1
  std::vector<std::vector<int>> subspaces;  // variable indices, window order
  Vector shift;                             // location of the optimum
  Vector weights;                           // positive per-subspace weights
  std::vector<Matrix> rotations;            // orthogonal, side |subspaces[i]|

  int dimension() const { return spec.dimension(); }
};

// Deterministic in the spec seed. Draw order from the instance generator:
// permutation (Fisher-Yates), shift, weights, rotations (per subspace, a
// column-major Gaussian matrix followed by QR with diagonal sign correction).
// Subspace i >= 1 covers the permutation window that extends overlaps[i-1]
// positions backward into block i-1, so consecutive subspaces share exactly
// that many variables and the total dimension stays fixed.
ProblemInstance generate_instance(const ProblemSpec& spec);

// Throws std::invalid_argument if any structural invariant is violated
// (permutation bijectivity, window sizes, overlap cardinalities, rotation
// orthogonality within 1e-9, shift strictly inside the bounds, coverage).
void validate_instance(const ProblemInstance& inst);

// F(x) = sum_i w_i f_base(z_i) with y = x - shift, y_i = y[S_i],
// z_i = t_asy(t_osz(R_i y_i), 0.2). Pure; out-of-bounds x is permitted.
double evaluate(const ProblemInstance& inst, const Vector& x);

bool in_bounds(const ProblemSpec& spec, const Vector& x);

// Theta[p,q] = 1 iff p = q or p and q share a subspace.
DesignStructureMatrix ground_truth_theta(const ProblemInstance& inst);

// The generating subspaces as a decomposition (groups sorted internally,
// construction order preserved).
Decomposition true_subspaces(const ProblemInstance& inst);

}  // namespace hcc
