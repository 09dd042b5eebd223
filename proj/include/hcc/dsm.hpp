#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace hcc {

// Symmetric boolean variable-interaction matrix with an all-1 diagonal,
// equivalent to an undirected interaction graph over the variables.
class DesignStructureMatrix {
 public:
  DesignStructureMatrix() = default;

  explicit DesignStructureMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {
    for (int i = 0; i < n; ++i) bits_[idx(i, i)] = 1;
  }

  int size() const { return n_; }

  bool at(int p, int q) const { return bits_[idx(p, q)] != 0; }

  void link(int p, int q) {
    bits_[idx(p, q)] = 1;
    bits_[idx(q, p)] = 1;
  }

  void unlink(int p, int q) {
    if (p == q) return;
    bits_[idx(p, q)] = 0;
    bits_[idx(q, p)] = 0;
  }

  bool symmetric_with_unit_diagonal() const {
    for (int i = 0; i < n_; ++i) {
      if (!at(i, i)) return false;
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    }
    return true;
  }

 private:
  std::size_t idx(int p, int q) const {
    return static_cast<std::size_t>(p) * n_ + q;
  }

  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

DesignStructureMatrix dsm_from_groups(int n, const std::vector<std::vector<int>>& groups);

// Text format: first line n, then n lines of n characters from {0,1}.
void save_dsm(const DesignStructureMatrix& theta, const std::filesystem::path& path);
DesignStructureMatrix load_dsm(const std::filesystem::path& path);

}  // namespace hcc
