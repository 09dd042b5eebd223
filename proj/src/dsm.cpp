#include "hcc/dsm.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace hcc {

DesignStructureMatrix dsm_from_groups(int n, const std::vector<std::vector<int>>& groups) {
  DesignStructureMatrix theta(n);
  for (const auto& group : groups)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b) theta.link(group[a], group[b]);
  return theta;
}

void save_dsm(const DesignStructureMatrix& theta, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  const int n = theta.size();
  out << n << '\n';
  std::string row(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = theta.at(i, j) ? '1' : '0';
    out << row << '\n';
  }
}

DesignStructureMatrix load_dsm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  int n = 0;
  if (!(in >> n) || n <= 0) throw std::runtime_error("dsm file: bad size line");
  DesignStructureMatrix theta(n);
  std::string row;
  for (int i = 0; i < n; ++i) {
    if (!(in >> row) || static_cast<int>(row.size()) != n)
      throw std::runtime_error("dsm file: row " + std::to_string(i) + " missing or wrong length");
    for (int j = 0; j < n; ++j) {
      const char c = row[static_cast<std::size_t>(j)];
      if (c != '0' && c != '1')
        throw std::runtime_error("dsm file: row " + std::to_string(i) + " has invalid character");
      if (c == '1' && i != j) theta.link(i, j);
      if (c == '0' && i == j) throw std::runtime_error("dsm file: zero diagonal entry");
    }
  }
  if (!theta.symmetric_with_unit_diagonal())
    throw std::runtime_error("dsm file: matrix is not symmetric");
  return theta;
}

}  // namespace hcc
