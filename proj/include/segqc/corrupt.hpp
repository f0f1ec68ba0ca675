#pragma once

#include <cstdint>
#include <vector>

#include "segqc/grid.hpp"

namespace segqc {

/// One corruption operator with its base parameters. Effective parameters
/// are the base values scaled by CorruptionSpec::severity: radii and
/// translation offsets are rounded to integers, probabilities and fractions
/// are clamped to [0,1].
struct Op {
  enum class Kind { kErode, kDilate, kTranslate, kDropClass, kBoundaryNoise, kSwapRegion };
  Kind kind;
  double radius = 0.0;            // erode / dilate
  double dx = 0.0, dy = 0.0, dz = 0.0;  // translate
  int class_id = 0;               // drop_class (foreground classes only)
  double fraction = 0.0;          // drop_class / swap_region
  double prob = 0.0;              // boundary_noise
};

Op erode(double radius);
Op dilate(double radius);
Op translate(double dx, double dy, double dz);
Op drop_class(int class_id, double fraction);
Op boundary_noise(double prob);
Op swap_region(double fraction);

struct CorruptionSpec {
  double severity = 0.0;
  std::vector<Op> ops;
  std::uint64_t seed = 0;
};

/// Applies the operators in order. Deterministic given (labels, spec);
/// severity 0 is the identity.
LabelMap corrupt(const LabelMap& labels, const CorruptionSpec& spec);

}  // namespace segqc
