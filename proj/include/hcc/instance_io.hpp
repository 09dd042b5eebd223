#pragma once

#include <filesystem>
#include <stdexcept>

#include "hcc/problem.hpp"

namespace hcc {

// Raised on malformed, truncated, or version-mismatched instance files; the
// message names the offending section or field.
struct InstanceIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-describing JSON file with fields {format_version, spec{base, s_size[],
// gamma[], bounds, seed}, permutation[], shift[], weights[], rotations[][][],
// subspaces[][]}. Reals are written with 17 significant decimal digits, so a
// load reproduces every double bit-exactly and the round trip is lossless.
void save_instance(const ProblemInstance& inst, const std::filesystem::path& path);
ProblemInstance load_instance(const std::filesystem::path& path);

}  // namespace hcc
