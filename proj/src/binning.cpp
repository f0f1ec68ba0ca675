#include "segqc/binning.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "segqc/rng.hpp"

namespace segqc {

int bin_index(double score) {
  if (!(score >= 0.0 && score <= 1.0))
    throw DataError("bin_scores: score " + std::to_string(score) + " outside [0,1]");
  return std::min(static_cast<int>(score * kNumBins), kNumBins - 1);
}

BinnedHistogram bin_scores(const std::vector<double>& scores) {
  BinnedHistogram h;
  for (int i = 0; i <= kNumBins; ++i) h.edges[i] = i / static_cast<double>(kNumBins);
  h.counts.fill(0);
  h.membership.reserve(scores.size());
  for (const double s : scores) {
    const int b = bin_index(s);
    ++h.counts[b];
    h.membership.push_back(b);
  }
  return h;
}

std::vector<std::size_t> balanced_subsample(const std::vector<double>& scores,
                                            std::uint64_t seed) {
  const BinnedHistogram h = bin_scores(scores);

  std::string empty;
  for (int b = 0; b < kNumBins; ++b)
    if (h.counts[b] == 0) empty += (empty.empty() ? "" : ", ") + std::to_string(b);
  if (!empty.empty())
    throw DataError("balanced_subsample: infeasible, empty bins: " + empty);

  const std::int64_t m = *std::min_element(h.counts.begin(), h.counts.end());

  std::array<std::vector<std::size_t>, kNumBins> per_bin;
  for (std::size_t i = 0; i < scores.size(); ++i)
    per_bin[h.membership[i]].push_back(i);

  std::vector<std::size_t> selected;
  selected.reserve(static_cast<std::size_t>(m) * kNumBins);
  for (int b = 0; b < kNumBins; ++b) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
    const auto pick = rng.sample_without_replacement(per_bin[b].size(),
                                                     static_cast<std::size_t>(m));
    for (const std::size_t k : pick) selected.push_back(per_bin[b][k]);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

}  // namespace segqc
