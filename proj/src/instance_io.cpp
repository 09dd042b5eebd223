#include "hcc/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace hcc {

namespace {

constexpr int kFormatVersion = 1;

// %.17g keeps every double bit-exact through a parse round trip.
void put(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void put(std::ostream& os, const Vector& v) {
  os << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    put(os, v[i]);
  }
  os << ']';
}

void put(std::ostream& os, const std::vector<int>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
}

const nlohmann::json& require(const nlohmann::json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw InstanceIoError(std::string("instance file: missing section '") + where + "'");
  return *it;
}

}  // namespace

void save_instance(const ProblemInstance& inst, const std::filesystem::path& path) {
  validate_instance(inst);
  std::ofstream out(path);
  if (!out) throw InstanceIoError("cannot open '" + path.string() + "' for writing");

  out << "{\n";
  out << "  \"format_version\": " << kFormatVersion << ",\n";
  out << "  \"spec\": {\n";
  out << "    \"base\": \"" << to_string(inst.spec.base) << "\",\n";
  out << "    \"s_size\": ";
  put(out, inst.spec.subspace_sizes);
  out << ",\n    \"gamma\": ";
  put(out, inst.spec.overlaps);
  out << ",\n    \"bounds\": [";
  put(out, inst.spec.lower);
  out << ',';
  put(out, inst.spec.upper);
  out << "],\n    \"seed\": " << inst.spec.seed << "\n  },\n";

  out << "  \"permutation\": ";
  put(out, inst.permutation);
  out << ",\n  \"shift\": ";
  put(out, inst.shift);
  out << ",\n  \"weights\": ";
  put(out, inst.weights);
  out << ",\n  \"rotations\": [";
  for (std::size_t i = 0; i < inst.rotations.size(); ++i) {
    if (i) out << ',';
    out << "\n    [";
    const Matrix& r = inst.rotations[i];
    for (Eigen::Index row = 0; row < r.rows(); ++row) {
      if (row) out << ',';
      out << '[';
      for (Eigen::Index col = 0; col < r.cols(); ++col) {
        if (col) out << ',';
        put(out, r(row, col));
      }
      out << ']';
    }
    out << ']';
  }
  out << "\n  ],\n  \"subspaces\": [";
  for (std::size_t i = 0; i < inst.subspaces.size(); ++i) {
    if (i) out << ',';
    out << "\n    ";
    put(out, inst.subspaces[i]);
  }
  out << "\n  ]\n}\n";

  if (!out) throw InstanceIoError("write to '" + path.string() + "' failed");
}

ProblemInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceIoError("cannot open '" + path.string() + "'");

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceIoError(std::string("instance file: malformed JSON (") + e.what() + ")");
  }

  try {
    const int version = require(j, "format_version", "format_version").get<int>();
    if (version != kFormatVersion)
      throw InstanceIoError("instance file: unsupported format_version " +
                            std::to_string(version));

    const auto& spec_j = require(j, "spec", "spec");
    ProblemInstance inst;
    inst.spec.base =
        base_function_from_string(require(spec_j, "base", "spec.base").get<std::string>());
    inst.spec.subspace_sizes =
        require(spec_j, "s_size", "spec.s_size").get<std::vector<int>>();
    inst.spec.overlaps = require(spec_j, "gamma", "spec.gamma").get<std::vector<int>>();
    const auto bounds = require(spec_j, "bounds", "spec.bounds").get<std::vector<double>>();
    if (bounds.size() != 2) throw InstanceIoError("instance file: spec.bounds needs two values");
    inst.spec.lower = bounds[0];
    inst.spec.upper = bounds[1];
    inst.spec.seed = require(spec_j, "seed", "spec.seed").get<std::uint64_t>();

    inst.permutation = require(j, "permutation", "permutation").get<std::vector<int>>();

    const auto shift = require(j, "shift", "shift").get<std::vector<double>>();
    inst.shift = Eigen::Map<const Vector>(shift.data(), static_cast<Eigen::Index>(shift.size()));

    const auto weights = require(j, "weights", "weights").get<std::vector<double>>();
    inst.weights =
        Eigen::Map<const Vector>(weights.data(), static_cast<Eigen::Index>(weights.size()));

    for (const auto& rot_j : require(j, "rotations", "rotations")) {
      const auto rows = rot_j.get<std::vector<std::vector<double>>>();
      const auto n = static_cast<Eigen::Index>(rows.size());
      Matrix r(n, n);
      for (Eigen::Index a = 0; a < n; ++a) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(a)].size()) != n)
          throw InstanceIoError("instance file: ragged rotation matrix");
        for (Eigen::Index b = 0; b < n; ++b)
          r(a, b) = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
      inst.rotations.push_back(std::move(r));
    }

    inst.subspaces =
        require(j, "subspaces", "subspaces").get<std::vector<std::vector<int>>>();

    try {
      validate_instance(inst);
    } catch (const std::invalid_argument& e) {
      throw InstanceIoError(std::string("instance file: ") + e.what());
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw InstanceIoError(std::string("instance file: bad field type (") + e.what() + ")");
  }
}

}  // namespace hcc
