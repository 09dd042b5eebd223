#pragma once

#include <vector>

namespace hcc {

struct RankSumResult {
  double p_value = 1.0;
  // Two-sided test at the given alpha, sign by median comparison of the
  // second sample against the first (minimization): '+' means b is
  // significantly lower, '-' significantly higher, '~' no significant
  // difference.
  char verdict = '~';
};

// Two-sided Wilcoxon rank-sum (Mann-Whitney) test. Exact enumeration of all
// rank assignments when the pooled size is <= 12, normal approximation with
// tie correction and continuity correction otherwise. Requires at least 3
// values per sample. Identical pooled samples give p = 1.
RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                                double alpha = 0.05);

double rank_sum_p_exact(const std::vector<double>& a, const std::vector<double>& b);
double rank_sum_p_normal(const std::vector<double>& a, const std::vector<double>& b);

double median(std::vector<double> values);

}  // namespace hcc
