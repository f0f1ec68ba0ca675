#include "segqc/normalize.hpp"

namespace segqc {

Volume normalize_intensity(const Volume& v, NormalizeMode mode) {
  double lo, hi;
  if (mode.global) {
    lo = mode.global->first;
    hi = mode.global->second;
    if (hi < lo)
      throw DataError("normalize_intensity: global max < min");
  } else {
    lo = v.data.minCoeff();
    hi = v.data.maxCoeff();
  }
  Volume out = v;
  if (hi == lo) {
    out.data.setZero();
    return out;
  }
  const float flo = static_cast<float>(lo);
  const float scale = static_cast<float>(1.0 / (hi - lo));
  out.data = ((v.data - flo) * scale).cwiseMax(0.0f).cwiseMin(1.0f);
  return out;
}

}  // namespace segqc
