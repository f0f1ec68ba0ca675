#pragma once

#include <string>
#include <vector>

#include "segqc/corrupt.hpp"
#include "segqc/metrics.hpp"
#include "segqc/phantom.hpp"

namespace segqc {

/// One (segmentation, ground truth) pair. Paths are file bases relative to
/// the manifest's directory; true per-class DSC is stored inline.
struct ManifestRow {
  std::string case_id;  // shared by all corrupted segmentations of one phantom
  std::string image;
  std::string seg;
  std::string gt;
  QualityScore dsc = QualityScore::Zero();
  double severity = 0.0;
  std::uint64_t seed = 0;  // corruption stream seed
  // optional RCA columns (augmented manifests)
  bool has_rca = false;
  QualityScore rca = QualityScore::Zero();
  double rca_ms = 0.0;
};

struct Manifest {
  std::string dir;  // directory the manifest was loaded from / will live in
  std::vector<ManifestRow> rows;

  std::string resolve(const std::string& rel) const;
};

Manifest load_manifest(const std::string& path);
void save_manifest(const std::string& path, const Manifest& m);

/// Base magnitudes of the per-row corruption recipe (scaled by the ladder
/// severity inside corrupt()).
struct CorruptionRecipe {
  double translate = 1.0;
  double translate_z = 0.25;
  double morph_radius = 0.5;
  double dilate_prob = 0.4;
  double boundary_noise = 0.08;
  double drop_prob = 0.35;
  double drop_fraction = 0.25;
  double swap_prob = 0.15;
  double swap_fraction = 0.08;
};

struct DatasetConfig {
  Dims3 grid{32, 32, 8};
  Spacing3 spacing;
  int n_cases = 360;
  std::uint64_t seed = 0;
  PhantomRanges phantom;
  CorruptionRecipe recipe;
  std::vector<double> ladder{0.0, 0.5, 1.0, 1.6, 2.3, 3.1, 4.0, 5.0, 6.2, 7.5};
  // WH DSC bin coverage handling
  int min_per_bin = 1;
  bool regenerate_on_shortfall = true;
  int max_extra_cases = 400;
};

/// Generates phantoms, corrupts each at every ladder severity, writes all
/// cases in the portable format plus manifest.csv under out_dir, and returns
/// the manifest. If a WH DSC decile ends up under min_per_bin, extra cases
/// are appended (or DataError is thrown when regeneration is disabled or
/// exhausted).
Manifest build_dataset(const DatasetConfig& cfg, const std::string& out_dir);

}  // namespace segqc
