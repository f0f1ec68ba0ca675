#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "segqc/error.hpp"

namespace segqc {

inline constexpr int kNumBins = 10;

/// 10 equal bins over [0,1]: bin i covers [i/10, (i+1)/10) for i < 9,
/// bin 9 covers [0.9, 1.0] (closed on the right).
struct BinnedHistogram {
  std::array<double, kNumBins + 1> edges;
  std::array<std::int64_t, kNumBins> counts;
  std::vector<int> membership;  // bin index per input score
};

/// Bin index for a single score in [0,1]; throws DataError outside the range.
int bin_index(double score);

BinnedHistogram bin_scores(const std::vector<double>& scores);

/// Selects min-count samples per bin, uniformly without replacement, so the
/// selected histogram is exactly uniform. Returned indices are sorted
/// ascending. Throws DataError listing the empty bins if any bin has no
/// samples.
std::vector<std::size_t> balanced_subsample(const std::vector<double>& scores,
                                            std::uint64_t seed);

}  // namespace segqc
