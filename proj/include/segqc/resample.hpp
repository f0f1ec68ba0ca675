#pragma once

#include "segqc/grid.hpp"

namespace segqc {

enum class ResampleMode { kLinear, kNearest };

/// Resamples a volume onto target_dims. The physical extent is preserved:
/// output spacing = input spacing * in_dim / out_dim per axis.
///
/// Nearest mode maps output index i to source index
/// floor((i + 0.5) * in_dim / out_dim); linear mode uses trilinear
/// interpolation with edge clamping.
Volume resample(const Volume& v, Dims3 target_dims, ResampleMode mode);

/// Labelmaps only admit nearest-neighbour resampling; linear mode throws
/// DataError (interpolated class ids are meaningless).
LabelMap resample(const LabelMap& m, Dims3 target_dims, ResampleMode mode);

}  // namespace segqc
