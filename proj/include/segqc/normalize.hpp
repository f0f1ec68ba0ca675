#pragma once

#include <optional>

#include "segqc/grid.hpp"

namespace segqc {

struct NormalizeMode {
  /// Empty: per-volume min-max. Set: fixed global (min, max) range.
  std::optional<std::pair<double, double>> global;

  static NormalizeMode per_volume() { return {}; }
  static NormalizeMode global_range(double lo, double hi) { return {{{lo, hi}}}; }
};

/// Affine map (x - min) / (max - min), clamped to [0,1] in global mode.
/// A degenerate range (max == min) maps every voxel to 0.
Volume normalize_intensity(const Volume& v, NormalizeMode mode = {});

}  // namespace segqc
