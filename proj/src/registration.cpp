#include "segqc/registration.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace segqc {

double ncc_at_shift(const Volume& moving, const Volume& fixed, Shift3 s) {
  require_same_dims(moving.dims, fixed.dims, "ncc_at_shift");
  const Dims3 d = fixed.dims;
  const int x0 = std::max(0, s.dx), x1 = std::min(d.nx, d.nx + s.dx);
  const int y0 = std::max(0, s.dy), y1 = std::min(d.ny, d.ny + s.dy);
  const int z0 = std::max(0, s.dz), z1 = std::min(d.nz, d.nz + s.dz);
  if (x0 >= x1 || y0 >= y1 || z0 >= z1) return 0.0;

  double sf = 0, sm = 0, sff = 0, smm = 0, sfm = 0;
  std::int64_t n = 0;
  for (int z = z0; z < z1; ++z)
    for (int y = y0; y < y1; ++y) {
      const float* fr = fixed.data.data() + fixed.index(x0, y, z);
      const float* mr = moving.data.data() + moving.index(x0 - s.dx, y - s.dy, z - s.dz);
      for (int x = 0; x < x1 - x0; ++x) {
        const double f = fr[x];
        const double m = mr[x];
        sf += f;
        sm += m;
        sff += f * f;
        smm += m * m;
        sfm += f * m;
        ++n;
      }
    }
  const double dn = static_cast<double>(n);
  const double cov = sfm - sf * sm / dn;
  const double varf = sff - sf * sf / dn;
  const double varm = smm - sm * sm / dn;
  if (varf <= 0.0 || varm <= 0.0) return 0.0;
  return cov / std::sqrt(varf * varm);
}

Shift3 register_translate(const Volume& moving, const Volume& fixed, int search_radius) {
  require_same_dims(moving.dims, fixed.dims, "register_translate");
  if (search_radius < 0)
    throw DataError("register_translate: search radius must be >= 0");

  std::vector<Shift3> shifts;
  shifts.reserve(static_cast<std::size_t>(2 * search_radius + 1) *
                 (2 * search_radius + 1) * (2 * search_radius + 1));
  for (int dz = -search_radius; dz <= search_radius; ++dz)
    for (int dy = -search_radius; dy <= search_radius; ++dy)
      for (int dx = -search_radius; dx <= search_radius; ++dx)
        shifts.push_back({dx, dy, dz});
  std::sort(shifts.begin(), shifts.end(), [](const Shift3& a, const Shift3& b) {
    const int la = std::abs(a.dx) + std::abs(a.dy) + std::abs(a.dz);
    const int lb = std::abs(b.dx) + std::abs(b.dy) + std::abs(b.dz);
    if (la != lb) return la < lb;
    if (a.dx != b.dx) return a.dx < b.dx;
    if (a.dy != b.dy) return a.dy < b.dy;
    return a.dz < b.dz;
  });

  Shift3 best = shifts.front();
  double best_ncc = ncc_at_shift(moving, fixed, best);
  for (std::size_t i = 1; i < shifts.size(); ++i) {
    const double v = ncc_at_shift(moving, fixed, shifts[i]);
    if (v > best_ncc) {  // strict: the first shift in tie-break order wins
      best_ncc = v;
      best = shifts[i];
    }
  }
  return best;
}

LabelMap propagate_labels(const LabelMap& atlas, Shift3 s) {
  LabelMap out(atlas.dims, atlas.spacing);
  const Dims3 d = atlas.dims;
  for (int z = 0; z < d.nz; ++z)
    for (int y = 0; y < d.ny; ++y)
      for (int x = 0; x < d.nx; ++x) {
        const int sx = x - s.dx, sy = y - s.dy, sz = z - s.dz;
        out.at(x, y, z) =
            atlas.in_bounds(sx, sy, sz) ? atlas.at(sx, sy, sz) : std::uint8_t(kBg);
      }
  return out;
}

}  // namespace segqc
