#include "segqc/phantom.hpp"

#include <algorithm>
#include <cmath>

namespace segqc {
namespace {

struct Extents {
  double lv_outer;   // LVC radius + LVM thickness
  double rvc_cx;     // RVC disk centre x relative to LV centre (negative)
  double reach_neg_x, reach_pos_x, reach_y;
};

Extents extents_of(double lvc_r, double lvm_t, double rvc_r, double rvc_off) {
  Extents e;
  e.lv_outer = lvc_r + lvm_t;
  e.rvc_cx = -(e.lv_outer + rvc_off);
  e.reach_pos_x = e.lv_outer;
  e.reach_neg_x = std::max(e.lv_outer, -e.rvc_cx + rvc_r);
  e.reach_y = std::max(e.lv_outer, rvc_r);
  return e;
}

}  // namespace

std::pair<Volume, LabelMap> generate_phantom(const PhantomSpec& spec) {
  if (spec.lvc_radius <= 0 || spec.rvc_radius <= 0)
    throw DataError("generate_phantom: radii must be positive");
  if (spec.lvm_thickness < 1.0)
    throw DataError("generate_phantom: LVM annulus thickness must be >= 1 voxel");
  if (spec.noise_sigma < 0)
    throw DataError("generate_phantom: noise sigma must be >= 0");

  const Dims3 d = spec.dims;
  const Extents e =
      extents_of(spec.lvc_radius, spec.lvm_thickness, spec.rvc_radius, spec.rvc_offset);
  const double j = spec.slice_jitter;
  if (spec.centre_x - e.reach_neg_x - j < 0 || spec.centre_x + e.reach_pos_x + j > d.nx - 1 ||
      spec.centre_y - e.reach_y - j < 0 || spec.centre_y + e.reach_y + j > d.ny - 1)
    throw DataError("generate_phantom: geometry exceeds grid bounds (" + d.str() + ")");

  Volume img(d, spec.spacing);
  LabelMap labels(d, spec.spacing);

  Rng rng(spec.seed);
  std::vector<std::pair<int, int>> jitter(d.nz);
  for (int z = 0; z < d.nz; ++z) {
    const int jx = spec.slice_jitter > 0
                       ? static_cast<int>(rng.uniform_int(-spec.slice_jitter, spec.slice_jitter))
                       : 0;
    const int jy = spec.slice_jitter > 0
                       ? static_cast<int>(rng.uniform_int(-spec.slice_jitter, spec.slice_jitter))
                       : 0;
    jitter[z] = {jx, jy};
  }

  const double r2_lvc = spec.lvc_radius * spec.lvc_radius;
  const double r2_lv_outer = e.lv_outer * e.lv_outer;
  const double r2_rvc = spec.rvc_radius * spec.rvc_radius;

  std::int64_t i = 0;
  std::int64_t class_count[kNumClasses] = {};
  for (int z = 0; z < d.nz; ++z) {
    const double cx = spec.centre_x + jitter[z].first;
    const double cy = spec.centre_y + jitter[z].second;
    const double rx = cx + e.rvc_cx;
    for (int y = 0; y < d.ny; ++y) {
      for (int x = 0; x < d.nx; ++x, ++i) {
        const double dx = x - cx, dy = y - cy;
        const double d2lv = dx * dx + dy * dy;
        std::uint8_t c = kBg;
        if (d2lv <= r2_lvc) {
          c = kLvc;
        } else if (d2lv <= r2_lv_outer) {
          c = kLvm;
        } else {
          const double ex = x - rx;
          if (ex * ex + dy * dy <= r2_rvc) c = kRvc;
        }
        labels.data[i] = c;
        ++class_count[c];
      }
    }
  }
  for (int c = 0; c < kNumClasses; ++c)
    if (class_count[c] == 0)
      throw DataError(std::string("generate_phantom: class ") + kClassNames[c] +
                      " is empty; adjust geometry");

  if (spec.noise_sigma > 0) {
    for (i = 0; i < labels.size(); ++i)
      img.data[i] = static_cast<float>(
          rng.normal(spec.class_means[labels.data[i]], spec.noise_sigma));
  } else {
    for (i = 0; i < labels.size(); ++i)
      img.data[i] = static_cast<float>(spec.class_means[labels.data[i]]);
  }
  return {std::move(img), std::move(labels)};
}

PhantomSpec sample_phantom_spec(const PhantomRanges& r, Dims3 dims, Spacing3 spacing,
                                Rng& rng) {
  PhantomSpec s;
  s.dims = dims;
  s.spacing = spacing;
  s.lvc_radius = rng.uniform(r.lvc_radius_min, r.lvc_radius_max);
  s.lvm_thickness = rng.uniform(r.lvm_thickness_min, r.lvm_thickness_max);
  s.rvc_radius = rng.uniform(r.rvc_radius_min, r.rvc_radius_max);
  s.rvc_offset = rng.uniform(r.rvc_offset_min, r.rvc_offset_max);
  s.slice_jitter = r.slice_jitter;
  s.noise_sigma = r.noise_sigma;
  for (int c = 0; c < kNumClasses; ++c)
    s.class_means[c] = r.class_means[c] + rng.uniform(-r.mean_jitter, r.mean_jitter);

  const Extents e = extents_of(s.lvc_radius, s.lvm_thickness, s.rvc_radius, s.rvc_offset);
  const double j = s.slice_jitter;
  // feasible centre window, intersected with the preferred jittered placement
  const int x_lo = static_cast<int>(std::ceil(e.reach_neg_x + j));
  const int x_hi = static_cast<int>(std::floor(dims.nx - 1 - e.reach_pos_x - j));
  const int y_lo = static_cast<int>(std::ceil(e.reach_y + j));
  const int y_hi = static_cast<int>(std::floor(dims.ny - 1 - e.reach_y - j));
  if (x_lo > x_hi || y_lo > y_hi)
    throw ConfigError("sample_phantom_spec: grid " + dims.str() +
                      " too small for the configured phantom ranges");

  // preferred centre: x biased toward +x so the RVC crescent has room
  const double px = dims.nx - 1 - e.reach_pos_x - j - 1.0;
  const double py = (dims.ny - 1) / 2.0;
  const auto draw = [&](double pref, int lo, int hi) {
    const int w_lo = std::max(lo, static_cast<int>(std::ceil(pref - r.centre_jitter)));
    const int w_hi = std::min(hi, static_cast<int>(std::floor(pref + r.centre_jitter)));
    if (w_lo > w_hi) return static_cast<int>(std::clamp(pref, double(lo), double(hi)));
    return static_cast<int>(rng.uniform_int(w_lo, w_hi));
  };
  s.centre_x = draw(px, x_lo, x_hi);
  s.centre_y = draw(py, y_lo, y_hi);
  return s;
}

}  // namespace segqc
