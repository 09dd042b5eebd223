#include "hcc/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hcc/rng.hpp"

namespace hcc {

void validate_cover(const Decomposition& d) {
  if (d.dimension <= 0) throw std::invalid_argument("decomposition: dimension must be positive");
  std::vector<char> covered(static_cast<std::size_t>(d.dimension), 0);
  for (const auto& group : d.groups) {
    if (group.empty()) throw std::invalid_argument("decomposition: empty group");
    for (int v : group) {
      if (v < 0 || v >= d.dimension)
        throw std::invalid_argument("decomposition: index out of range");
      covered[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 0; v < d.dimension; ++v)
    if (!covered[static_cast<std::size_t>(v)])
      throw std::invalid_argument("decomposition: variable " + std::to_string(v) +
                                  " is not covered");
}

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else { ++count; ++ia; ++ib; }
  }
  return count;
}

}  // namespace

double accuracy(const Decomposition& found, const Decomposition& truth, int dimension) {
  if (found.dimension != dimension || truth.dimension != dimension)
    throw std::invalid_argument("accuracy: dimension mismatch");
  validate_cover(found);
  validate_cover(truth);

  long matched = 0;
  long total = 0;
  for (const auto& true_group : truth.groups) {
    total += static_cast<long>(true_group.size());
    int best = 0;
    for (const auto& found_group : found.groups)
      best = std::max(best, intersection_size(true_group, found_group));
    matched += best;
  }
  return static_cast<double>(matched) / static_cast<double>(total);
}

double degree_of_overlap(const Decomposition& d, int dimension) {
  if (d.dimension != dimension)
    throw std::invalid_argument("degree_of_overlap: dimension mismatch");
  std::vector<int> membership(static_cast<std::size_t>(dimension), 0);
  for (const auto& group : d.groups)
    for (int v : group) ++membership[static_cast<std::size_t>(v)];
  const long shared = std::count_if(membership.begin(), membership.end(),
                                    [](int c) { return c >= 2; });
  return static_cast<double>(shared) / static_cast<double>(dimension);
}

Decomposition random_decomposition(int dimension, int k, std::uint64_t seed) {
  if (dimension <= 0) throw std::invalid_argument("random_decomposition: bad dimension");
  if (k <= 0 || k > dimension)
    throw std::invalid_argument("random_decomposition: group count must be in 1..dimension");

  std::vector<int> perm(static_cast<std::size_t>(dimension));
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  for (int i = dimension - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }

  Decomposition out;
  out.dimension = dimension;
  const int base = dimension / k;
  int pos = 0;
  for (int g = 0; g < k; ++g) {
    const int size = (g == k - 1) ? dimension - pos : base;
    std::vector<int> group(perm.begin() + pos, perm.begin() + pos + size);
    std::sort(group.begin(), group.end());
    out.groups.push_back(std::move(group));
    pos += size;
  }
  return out;
}

IdealityReport is_ideal_decomposition(const Decomposition& d, const DesignStructureMatrix& theta) {
  validate_cover(d);
  if (d.dimension != theta.size())
    throw std::invalid_argument("is_ideal_decomposition: dimension mismatch");

  IdealityReport report;

  report.groups_fully_interacting = true;
  for (const auto& group : d.groups) {
    for (std::size_t a = 0; a < group.size() && report.groups_fully_interacting; ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        if (!theta.at(group[a], group[b])) {
          report.groups_fully_interacting = false;
          break;
        }
    if (!report.groups_fully_interacting) break;
  }

  // interactions explainable by shared membership: p and q must co-occur in
  // some group whenever theta links them
  std::vector<std::vector<int>> member_of(static_cast<std::size_t>(d.dimension));
  for (std::size_t g = 0; g < d.groups.size(); ++g)
    for (int v : d.groups[g]) member_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(g));

  report.interactions_covered = true;
  for (int p = 0; p < theta.size() && report.interactions_covered; ++p)
    for (int q = p + 1; q < theta.size(); ++q) {
      if (!theta.at(p, q)) continue;
      if (intersection_size(member_of[static_cast<std::size_t>(p)],
                            member_of[static_cast<std::size_t>(q)]) == 0) {
        report.interactions_covered = false;
        break;
      }
    }
  return report;
}

bool detect_interaction(const ObjectiveFn& f, int p, int q, const Vector& x0,
                        double delta, double tol, std::optional<double> f_x0) {
  if (p == q) throw std::invalid_argument("detect_interaction: p and q must differ");
  if (p < 0 || q < 0 || p >= x0.size() || q >= x0.size())
    throw std::invalid_argument("detect_interaction: index out of range");
  if (!(delta > 0.0)) throw std::invalid_argument("detect_interaction: delta must be positive");

  const double f0 = f_x0 ? *f_x0 : f(x0);
  Vector xp = x0;
  xp[p] += delta;
  Vector xq = x0;
  xq[q] += delta;
  Vector xpq = xp;
  xpq[q] += delta;

  const double fp = f(xp);
  const double fq = f(xq);
  const double fpq = f(xpq);
  if (!std::isfinite(f0) || !std::isfinite(fp) || !std::isfinite(fq) || !std::isfinite(fpq))
    throw std::runtime_error("detect_interaction: objective returned a non-finite value");

  return std::abs((fpq - fq) - (fp - f0)) > tol;
}

double default_interaction_tol(double f_x0) {
  return 1e-10 * std::max(1.0, std::abs(f_x0));
}

void save_decomposition(const Decomposition& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  for (const auto& group : d.groups) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) out << ' ';
      out << group[i];
    }
    out << '\n';
  }
}

Decomposition load_decomposition(const std::filesystem::path& path, int dimension) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  Decomposition d;
  d.dimension = dimension;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<int> group;
    int v;
    while (row >> v) group.push_back(v);
    if (!row.eof()) throw std::runtime_error("decomposition file: invalid token in '" + line + "'");
    if (!std::is_sorted(group.begin(), group.end()))
      throw std::runtime_error("decomposition file: group indices must be ascending");
    d.groups.push_back(std::move(group));
  }
  validate_cover(d);
  return d;
}

}  // namespace hcc
