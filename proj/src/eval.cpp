#include "segqc/eval.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace segqc {

ClassificationStats classification_stats(const std::vector<double>& pred_wh,
                                         const std::vector<double>& true_wh,
                                         double threshold) {
  if (pred_wh.size() != true_wh.size())
    throw DataError("classification_stats: length mismatch (" +
                    std::to_string(pred_wh.size()) + " vs " +
                    std::to_string(true_wh.size()) + ")");
  ClassificationStats s;
  s.threshold = threshold;
  for (std::size_t i = 0; i < pred_wh.size(); ++i) {
    const bool actual = true_wh[i] >= threshold;
    const bool predicted = pred_wh[i] >= threshold;
    if (actual && predicted) ++s.tp;
    else if (!actual && predicted) ++s.fp;
    else if (!actual && !predicted) ++s.tn;
    else ++s.fn;
  }
  const std::int64_t total = s.tp + s.fp + s.tn + s.fn;
  if (s.tp + s.fn > 0) s.tpr = static_cast<double>(s.tp) / (s.tp + s.fn);
  if (s.fp + s.tn > 0) s.fpr = static_cast<double>(s.fp) / (s.fp + s.tn);
  if (total > 0) s.accuracy = static_cast<double>(s.tp + s.tn) / total;
  return s;
}

namespace {

BandStats band_stats(const std::vector<double>& abs_errors) {
  BandStats b;
  b.n = static_cast<std::int64_t>(abs_errors.size());
  if (b.n == 0) return b;
  double sum = 0.0;
  for (const double e : abs_errors) sum += e;
  b.mae = sum / static_cast<double>(b.n);
  double var = 0.0;
  for (const double e : abs_errors) var += (e - b.mae) * (e - b.mae);
  b.sd = std::sqrt(var / static_cast<double>(b.n));
  return b;
}

nlohmann::json band_json(const BandStats& b) {
  return {{"n", b.n}, {"mae", b.mae}, {"sd", b.sd}};
}

}  // namespace

EvalReport mae_report(const std::vector<QualityScore>& preds,
                      const std::vector<QualityScore>& truths,
                      double threshold) {
  if (preds.size() != truths.size())
    throw DataError("mae_report: length mismatch");
  if (preds.empty())
    throw DataError("mae_report: empty input");

  EvalReport r;
  r.n = static_cast<std::int64_t>(preds.size());
  r.threshold = threshold;
  for (int c = 0; c < kNumScores; ++c) {
    std::vector<double> full, poor, good;
    full.reserve(preds.size());
    for (std::size_t i = 0; i < preds.size(); ++i) {
      const double err = std::abs(preds[i][c] - truths[i][c]);
      full.push_back(err);
      (truths[i][c] < 0.5 ? poor : good).push_back(err);
    }
    r.full[c] = band_stats(full);
    r.poor[c] = band_stats(poor);
    r.good[c] = band_stats(good);
  }

  std::vector<double> pred_wh(preds.size()), true_wh(preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    pred_wh[i] = preds[i][kWh];
    true_wh[i] = truths[i][kWh];
  }
  r.classification_wh = classification_stats(pred_wh, true_wh, threshold);
  return r;
}

std::string EvalReport::to_json() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["n"] = n;
  j["threshold"] = threshold;
  j["sd_convention"] = "population";
  for (int c = 0; c < kNumScores; ++c) {
    j["classes"][kClassNames[c]] = {{"full", band_json(full[c])},
                                    {"poor", band_json(poor[c])},
                                    {"good", band_json(good[c])}};
  }
  const auto& cs = classification_wh;
  j["classification_wh"] = {{"threshold", cs.threshold}, {"tp", cs.tp},
                            {"fp", cs.fp},               {"tn", cs.tn},
                            {"fn", cs.fn},               {"tpr", cs.tpr},
                            {"fpr", cs.fpr},             {"accuracy", cs.accuracy}};
  return j.dump(2) + "\n";
}

std::string EvalReport::to_csv() const {
  std::string out = "class,band,n,mae,sd\n";
  char line[160];
  const char* bands[3] = {"full", "poor", "good"};
  for (int c = 0; c < kNumScores; ++c) {
    const BandStats* rows[3] = {&full[c], &poor[c], &good[c]};
    for (int b = 0; b < 3; ++b) {
      std::snprintf(line, sizeof(line), "%s,%s,%lld,%.9g,%.9g\n", kClassNames[c],
                    bands[b], static_cast<long long>(rows[b]->n), rows[b]->mae,
                    rows[b]->sd);
      out += line;
    }
  }
  return out;
}

}  // namespace segqc
