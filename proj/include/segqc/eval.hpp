#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segqc/metrics.hpp"

namespace segqc {

/// Binary quality classification at a DSC threshold. Positive class is
/// "good quality": true DSC >= threshold; a prediction is positive iff
/// pred >= threshold. Rates with an empty denominator are reported as 0;
/// the raw counts disambiguate.
struct ClassificationStats {
  double threshold = 0.0;
  std::int64_t tp = 0, fp = 0, tn = 0, fn = 0;
  double tpr = 0.0, fpr = 0.0, accuracy = 0.0;
};

ClassificationStats classification_stats(const std::vector<double>& pred_wh,
                                         const std::vector<double>& true_wh,
                                         double threshold);

/// Absolute-error summary of one (class, band) cell. SD is the population
/// standard deviation (divide by n).
struct BandStats {
  std::int64_t n = 0;
  double mae = 0.0;
  double sd = 0.0;
};

/// Per-class MAE/SD over the full range and split into poor (true DSC < 0.5)
/// and good (true DSC >= 0.5) bands, plus whole-heart classification stats.
/// Band membership is decided by the true per-class DSC.
struct EvalReport {
  std::int64_t n = 0;
  double threshold = 0.0;
  BandStats full[kNumScores];
  BandStats poor[kNumScores];
  BandStats good[kNumScores];
  ClassificationStats classification_wh;

  std::string to_json() const;
  std::string to_csv() const;
};

EvalReport mae_report(const std::vector<QualityScore>& preds,
                      const std::vector<QualityScore>& truths,
                      double threshold = 0.7);

}  // namespace segqc
