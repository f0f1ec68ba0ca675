#include "segqc/metrics.hpp"

namespace segqc {

Mask class_mask(const LabelMap& labels, std::uint8_t class_id) {
  Mask m(labels.dims, labels.spacing);
  m.data = (labels.data == class_id).cast<std::uint8_t>();
  return m;
}

Mask foreground_mask(const LabelMap& labels) {
  Mask m(labels.dims, labels.spacing);
  m.data = (labels.data != std::uint8_t(kBg)).cast<std::uint8_t>();
  return m;
}

double dice(const Mask& a, const Mask& b) {
  require_same_dims(a.dims, b.dims, "dice");
  std::int64_t na = 0, nb = 0, inter = 0;
  for (std::int64_t i = 0; i < a.size(); ++i) {
    na += a.data[i] != 0;
    nb += b.data[i] != 0;
    inter += (a.data[i] != 0) && (b.data[i] != 0);
  }
  if (na + nb == 0) return 1.0;
  return 2.0 * static_cast<double>(inter) / static_cast<double>(na + nb);
}

QualityScore dice_all(const LabelMap& pred, const LabelMap& gt) {
  require_same_dims(pred.dims, gt.dims, "dice_all");
  // single pass: per-class sizes and intersections, plus foreground unions
  std::int64_t np[kNumClasses] = {}, ng[kNumClasses] = {}, ni[kNumClasses] = {};
  std::int64_t fp = 0, fg = 0, fi = 0;
  for (std::int64_t i = 0; i < pred.size(); ++i) {
    const std::uint8_t p = pred.data[i], g = gt.data[i];
    if (p >= kNumClasses || g >= kNumClasses)
      throw DataError("dice_all: invalid class id at voxel " + std::to_string(i));
    ++np[p];
    ++ng[g];
    if (p == g) ++ni[p];
    const bool pf = p != kBg, gf = g != kBg;
    fp += pf;
    fg += gf;
    fi += pf && gf;
  }
  QualityScore s;
  for (int c = 0; c < kNumClasses; ++c) {
    const std::int64_t denom = np[c] + ng[c];
    s[c] = denom == 0 ? 1.0 : 2.0 * static_cast<double>(ni[c]) / static_cast<double>(denom);
  }
  s[kWh] = (fp + fg) == 0 ? 1.0 : 2.0 * static_cast<double>(fi) / static_cast<double>(fp + fg);
  return s;
}

}  // namespace segqc
