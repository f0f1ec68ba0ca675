#include "segqc/resample.hpp"

#include <algorithm>
#include <cmath>

namespace segqc {
namespace {

void check_target(const Dims3& t) {
  if (t.nx <= 0 || t.ny <= 0 || t.nz <= 0)
    throw DataError("resample: target dims must be positive, got " + t.str());
}

Spacing3 rescale_spacing(const Spacing3& s, const Dims3& in, const Dims3& out) {
  return {s.sx * in.nx / out.nx, s.sy * in.ny / out.ny, s.sz * in.nz / out.nz};
}

inline int nearest_src(int i, int in_dim, int out_dim) {
  const int s = static_cast<int>(std::floor((i + 0.5) * in_dim / out_dim));
  return std::clamp(s, 0, in_dim - 1);
}

template <typename Scalar>
Grid3<Scalar> resample_nearest(const Grid3<Scalar>& g, Dims3 t) {
  Grid3<Scalar> out(t, rescale_spacing(g.spacing, g.dims, t));
  std::vector<int> xs(t.nx), ys(t.ny), zs(t.nz);
  for (int x = 0; x < t.nx; ++x) xs[x] = nearest_src(x, g.dims.nx, t.nx);
  for (int y = 0; y < t.ny; ++y) ys[y] = nearest_src(y, g.dims.ny, t.ny);
  for (int z = 0; z < t.nz; ++z) zs[z] = nearest_src(z, g.dims.nz, t.nz);
  std::int64_t i = 0;
  for (int z = 0; z < t.nz; ++z)
    for (int y = 0; y < t.ny; ++y)
      for (int x = 0; x < t.nx; ++x, ++i)
        out.data[i] = g.at(xs[x], ys[y], zs[z]);
  return out;
}

struct LerpCoord {
  int i0, i1;
  float w1;  // weight of i1; weight of i0 is 1-w1
};

LerpCoord lerp_coord(int i, int in_dim, int out_dim) {
  // align-corners=false convention, clamped at the edges
  double s = (i + 0.5) * static_cast<double>(in_dim) / out_dim - 0.5;
  s = std::clamp(s, 0.0, static_cast<double>(in_dim - 1));
  const int i0 = std::min(static_cast<int>(std::floor(s)), in_dim - 1);
  const int i1 = std::min(i0 + 1, in_dim - 1);
  return {i0, i1, static_cast<float>(s - i0)};
}

Volume resample_linear(const Volume& v, Dims3 t) {
  Volume out(t, rescale_spacing(v.spacing, v.dims, t));
  std::vector<LerpCoord> xs(t.nx), ys(t.ny), zs(t.nz);
  for (int x = 0; x < t.nx; ++x) xs[x] = lerp_coord(x, v.dims.nx, t.nx);
  for (int y = 0; y < t.ny; ++y) ys[y] = lerp_coord(y, v.dims.ny, t.ny);
  for (int z = 0; z < t.nz; ++z) zs[z] = lerp_coord(z, v.dims.nz, t.nz);
  std::int64_t i = 0;
  for (int z = 0; z < t.nz; ++z) {
    const auto& cz = zs[z];
    for (int y = 0; y < t.ny; ++y) {
      const auto& cy = ys[y];
      for (int x = 0; x < t.nx; ++x, ++i) {
        const auto& cx = xs[x];
        const float c000 = v.at(cx.i0, cy.i0, cz.i0), c100 = v.at(cx.i1, cy.i0, cz.i0);
        const float c010 = v.at(cx.i0, cy.i1, cz.i0), c110 = v.at(cx.i1, cy.i1, cz.i0);
        const float c001 = v.at(cx.i0, cy.i0, cz.i1), c101 = v.at(cx.i1, cy.i0, cz.i1);
        const float c011 = v.at(cx.i0, cy.i1, cz.i1), c111 = v.at(cx.i1, cy.i1, cz.i1);
        const float c00 = c000 + (c100 - c000) * cx.w1;
        const float c10 = c010 + (c110 - c010) * cx.w1;
        const float c01 = c001 + (c101 - c001) * cx.w1;
        const float c11 = c011 + (c111 - c011) * cx.w1;
        const float c0 = c00 + (c10 - c00) * cy.w1;
        const float c1 = c01 + (c11 - c01) * cy.w1;
        out.data[i] = c0 + (c1 - c0) * cz.w1;
      }
    }
  }
  return out;
}

}  // namespace

Volume resample(const Volume& v, Dims3 target_dims, ResampleMode mode) {
  check_target(target_dims);
  if (mode == ResampleMode::kNearest) return resample_nearest(v, target_dims);
  return resample_linear(v, target_dims);
}

LabelMap resample(const LabelMap& m, Dims3 target_dims, ResampleMode mode) {
  check_target(target_dims);
  if (mode == ResampleMode::kLinear)
    throw DataError("resample: linear mode is invalid for labelmaps; use nearest");
  return resample_nearest(m, target_dims);
}

}  // namespace segqc
