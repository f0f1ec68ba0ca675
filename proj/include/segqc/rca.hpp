#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "segqc/dataset.hpp"
#include "segqc/metrics.hpp"
#include "segqc/normalize.hpp"
#include "segqc/phantom.hpp"
#include "segqc/registration.hpp"

namespace segqc {

/// Reference cases with verified labelmaps. Images are stored normalized;
/// all entries share one working grid.
struct ReferenceDB {
  std::vector<Volume> images;
  std::vector<LabelMap> labels;

  std::size_t size() const { return images.size(); }
};

/// Generates a reference database of k phantoms from its own seed stream.
ReferenceDB build_reference_db(int k, Dims3 grid, Spacing3 spacing,
                               const PhantomRanges& ranges, std::uint64_t seed,
                               NormalizeMode normalize = {});

struct RcaPrediction {
  QualityScore scores;  // elementwise max over references
  Eigen::Matrix<double, Eigen::Dynamic, kNumScores> table;  // K x 5, per reference
  std::array<int, kNumScores> argmax_ref;  // smallest index on ties
};

/// Reverse-classification-accuracy quality estimate: registers the test
/// image to every reference (translation-only NCC search), propagates the
/// test segmentation, scores it against the reference GT, and takes the
/// per-class best value as the prediction. test_img must be normalized and
/// on the same grid as the db.
RcaPrediction rca_predict(const Volume& test_img, const LabelMap& test_seg,
                          const ReferenceDB& db, int search_radius);

/// Runs rca_predict over every manifest row (in parallel across cases when
/// jobs > 1; results are ordered by row, so the output is independent of
/// jobs) and returns the manifest augmented with rca_* columns and per-case
/// wall-clock milliseconds.
Manifest rca_label_dataset(const Manifest& manifest, const ReferenceDB& db,
                           int search_radius, NormalizeMode normalize = {},
                           int jobs = 1);

}  // namespace segqc
