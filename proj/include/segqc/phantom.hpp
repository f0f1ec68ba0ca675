#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "segqc/grid.hpp"
#include "segqc/rng.hpp"

namespace segqc {

/// Short-axis-like cardiac phantom: an LVC disk inside an LVM annulus with
/// an RVC crescent hugging the annulus on the -x side, extruded along z
/// with a rigid per-slice centre jitter.
struct PhantomSpec {
  Dims3 dims{32, 32, 8};
  Spacing3 spacing;
  int centre_x = 19;
  int centre_y = 16;
  double lvc_radius = 6.0;
  double lvm_thickness = 2.5;
  double rvc_radius = 5.0;
  double rvc_offset = 0.0;  // gap between the LVM outer wall and the RVC disk centre
  int slice_jitter = 1;     // max per-slice integer centre shift
  std::array<double, kNumClasses> class_means{0.15, 0.85, 0.45, 0.75};
  double noise_sigma = 0.05;
  std::uint64_t seed = 0;
};

/// Rasterizes the phantom. Deterministic given spec (including seed).
/// Throws DataError if the geometry (including jitter margin) does not fit
/// the grid or any class ends up empty.
std::pair<Volume, LabelMap> generate_phantom(const PhantomSpec& spec);

/// Case-to-case variability ranges used when sampling PhantomSpecs.
struct PhantomRanges {
  double lvc_radius_min = 5.0, lvc_radius_max = 7.5;
  double lvm_thickness_min = 2.0, lvm_thickness_max = 3.0;
  double rvc_radius_min = 4.0, rvc_radius_max = 6.0;
  double rvc_offset_min = 0.0, rvc_offset_max = 1.0;
  double centre_jitter = 3.0;  // case-level placement window around the preferred centre
  int slice_jitter = 1;
  std::array<double, kNumClasses> class_means{0.15, 0.85, 0.45, 0.75};
  double mean_jitter = 0.05;
  double noise_sigma = 0.05;
};

/// Draws a PhantomSpec whose geometry is guaranteed to fit the grid.
/// The caller still owns spec.seed.
PhantomSpec sample_phantom_spec(const PhantomRanges& ranges, Dims3 dims,
                                Spacing3 spacing, Rng& rng);

}  // namespace segqc
