#include <algorithm>
#include <set>
#include <stdexcept>

#include "hcc/decomposition.hpp"

namespace hcc {

namespace {

// The recursion walks the rows of the current principal submatrix, emitting
// each row's positive component set when it induces an all-1 block and
// descending into it otherwise. Two guards keep this finite:
//  - a row whose positive set equals the whole current set is skipped
//    (descending would recurse on the same matrix forever; its interactions
//    are recovered through the other rows), and
//  - index sets that were already expanded are not expanded again (the first
//    expansion emitted everything this one would).
struct RddsmEngine {
  const DesignStructureMatrix& theta;
  std::set<std::vector<int>> expanded;
  std::vector<std::vector<int>> emitted;

  bool all_one(const std::vector<int>& s) const {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (!theta.at(s[a], s[b])) return false;
    return true;
  }

  void ddsm(const std::vector<int>& rows) {
    std::vector<int> positive;
    for (int r : rows) {
      positive.clear();
      for (int q : rows)
        if (theta.at(r, q)) positive.push_back(q);
      if (all_one(positive)) {
        emitted.push_back(positive);
        continue;
      }
      if (positive.size() == rows.size()) continue;
      if (!expanded.insert(positive).second) continue;
      ddsm(positive);
    }
  }
};

}  // namespace

Decomposition rddsm(const DesignStructureMatrix& theta, bool prune_subsets) {
  if (theta.size() <= 0) throw std::invalid_argument("rddsm: empty matrix");
  if (!theta.symmetric_with_unit_diagonal())
    throw std::invalid_argument("rddsm: matrix must be symmetric with an all-1 diagonal");

  RddsmEngine engine{theta, {}, {}};
  std::vector<int> all(static_cast<std::size_t>(theta.size()));
  for (int i = 0; i < theta.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  engine.ddsm(all);

  auto& groups = engine.emitted;
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());

  if (prune_subsets) {
    std::vector<std::vector<int>> kept;
    for (const auto& g : groups) {
      bool subset = false;
      for (const auto& other : groups) {
        if (other.size() <= g.size() || other == g) continue;
        if (std::includes(other.begin(), other.end(), g.begin(), g.end())) {
          subset = true;
          break;
        }
      }
      if (!subset) kept.push_back(g);
    }
    groups.swap(kept);
  }

  Decomposition out;
  out.dimension = theta.size();
  out.groups = std::move(groups);
  validate_cover(out);
  return out;
}

}  // namespace hcc
