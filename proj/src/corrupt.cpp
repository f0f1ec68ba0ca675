#include "segqc/corrupt.hpp"

#include <algorithm>
#include <cmath>

#include "segqc/rng.hpp"

namespace segqc {

Op erode(double radius) {
  if (radius < 0) throw ConfigError("erode: radius must be >= 0");
  Op op{Op::Kind::kErode};
  op.radius = radius;
  return op;
}

Op dilate(double radius) {
  if (radius < 0) throw ConfigError("dilate: radius must be >= 0");
  Op op{Op::Kind::kDilate};
  op.radius = radius;
  return op;
}

Op translate(double dx, double dy, double dz) {
  Op op{Op::Kind::kTranslate};
  op.dx = dx;
  op.dy = dy;
  op.dz = dz;
  return op;
}

Op drop_class(int class_id, double fraction) {
  if (class_id < 1 || class_id >= kNumClasses)
    throw ConfigError("drop_class: class id must be a foreground class (1..3)");
  if (fraction < 0 || fraction > 1)
    throw ConfigError("drop_class: fraction must lie in [0,1]");
  Op op{Op::Kind::kDropClass};
  op.class_id = class_id;
  op.fraction = fraction;
  return op;
}

Op boundary_noise(double prob) {
  if (prob < 0 || prob > 1) throw ConfigError("boundary_noise: prob must lie in [0,1]");
  Op op{Op::Kind::kBoundaryNoise};
  op.prob = prob;
  return op;
}

Op swap_region(double fraction) {
  if (fraction < 0 || fraction > 1)
    throw ConfigError("swap_region: fraction must lie in [0,1]");
  Op op{Op::Kind::kSwapRegion};
  op.fraction = fraction;
  return op;
}

namespace {

// 6-connected neighbour offsets, fixed scan order
constexpr int kNbr[6][3] = {{-1, 0, 0}, {1, 0, 0}, {0, -1, 0},
                            {0, 1, 0},  {0, 0, -1}, {0, 0, 1}};

bool is_fg(const LabelMap& m, int x, int y, int z) {
  return m.in_bounds(x, y, z) && m.at(x, y, z) != kBg;
}

void erode_once(LabelMap& m) {
  const LabelMap src = m;
  const Dims3 d = m.dims;
  for (int z = 0; z < d.nz; ++z)
    for (int y = 0; y < d.ny; ++y)
      for (int x = 0; x < d.nx; ++x) {
        if (src.at(x, y, z) == kBg) continue;
        for (const auto& n : kNbr) {
          if (!is_fg(src, x + n[0], y + n[1], z + n[2])) {
            m.at(x, y, z) = kBg;
            break;
          }
        }
      }
}

void dilate_once(LabelMap& m) {
  const LabelMap src = m;
  const Dims3 d = m.dims;
  for (int z = 0; z < d.nz; ++z)
    for (int y = 0; y < d.ny; ++y)
      for (int x = 0; x < d.nx; ++x) {
        if (src.at(x, y, z) != kBg) continue;
        // gained voxels take the class of the first foreground neighbour
        for (const auto& n : kNbr) {
          const int nx = x + n[0], ny = y + n[1], nz = z + n[2];
          if (is_fg(src, nx, ny, nz)) {
            m.at(x, y, z) = src.at(nx, ny, nz);
            break;
          }
        }
      }
}

void apply_translate(LabelMap& m, int ex, int ey, int ez) {
  if (ex == 0 && ey == 0 && ez == 0) return;
  const LabelMap src = m;
  const Dims3 d = m.dims;
  for (int z = 0; z < d.nz; ++z)
    for (int y = 0; y < d.ny; ++y)
      for (int x = 0; x < d.nx; ++x) {
        const int sx = x - ex, sy = y - ey, sz = z - ez;
        m.at(x, y, z) = src.in_bounds(sx, sy, sz) ? src.at(sx, sy, sz) : std::uint8_t(kBg);
      }
}

void apply_drop(LabelMap& m, int class_id, double fraction, Rng& rng) {
  std::vector<std::int64_t> idx;
  for (std::int64_t i = 0; i < m.size(); ++i)
    if (m.data[i] == class_id) idx.push_back(i);
  const auto k = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(idx.size())));
  if (k == 0) return;
  const auto pick = rng.sample_without_replacement(idx.size(), k);
  for (const std::size_t p : pick) m.data[idx[p]] = kBg;
}

void apply_boundary_noise(LabelMap& m, double prob, Rng& rng) {
  if (prob <= 0) return;
  const LabelMap src = m;
  const Dims3 d = m.dims;
  for (int z = 0; z < d.nz; ++z)
    for (int y = 0; y < d.ny; ++y)
      for (int x = 0; x < d.nx; ++x) {
        const bool fg = src.at(x, y, z) != kBg;
        std::uint8_t flip_to = kBg;
        bool boundary = false;
        for (const auto& n : kNbr) {
          const int nx = x + n[0], ny = y + n[1], nz = z + n[2];
          if (!src.in_bounds(nx, ny, nz)) continue;
          const std::uint8_t nc = src.at(nx, ny, nz);
          if (fg && nc == kBg) {
            boundary = true;
            break;
          }
          if (!fg && nc != kBg) {
            boundary = true;
            flip_to = nc;
            break;
          }
        }
        if (!boundary) continue;
        if (rng.bernoulli(prob)) m.at(x, y, z) = fg ? std::uint8_t(kBg) : flip_to;
      }
}

void apply_swap(LabelMap& m, double fraction, Rng& rng) {
  if (fraction <= 0) return;
  bool present[kNumClasses] = {};
  for (std::int64_t i = 0; i < m.size(); ++i) present[m.data[i]] = true;
  std::vector<std::uint8_t> fg;
  for (int c = 1; c < kNumClasses; ++c)
    if (present[c]) fg.push_back(static_cast<std::uint8_t>(c));
  if (fg.size() < 2) return;
  const std::size_t a = rng.uniform_index(fg.size());
  std::size_t b = rng.uniform_index(fg.size() - 1);
  if (b >= a) ++b;
  const std::uint8_t c1 = fg[a], c2 = fg[b];

  const Dims3 d = m.dims;
  const double side = std::cbrt(fraction);
  const int lx = std::clamp(static_cast<int>(std::lround(side * d.nx)), 1, d.nx);
  const int ly = std::clamp(static_cast<int>(std::lround(side * d.ny)), 1, d.ny);
  const int lz = std::clamp(static_cast<int>(std::lround(side * d.nz)), 1, d.nz);
  const int ox = static_cast<int>(rng.uniform_index(d.nx - lx + 1));
  const int oy = static_cast<int>(rng.uniform_index(d.ny - ly + 1));
  const int oz = static_cast<int>(rng.uniform_index(d.nz - lz + 1));
  for (int z = oz; z < oz + lz; ++z)
    for (int y = oy; y < oy + ly; ++y)
      for (int x = ox; x < ox + lx; ++x) {
        std::uint8_t& c = m.at(x, y, z);
        if (c == c1) c = c2;
        else if (c == c2) c = c1;
      }
}

}  // namespace

LabelMap corrupt(const LabelMap& labels, const CorruptionSpec& spec) {
  if (spec.severity < 0) throw ConfigError("corrupt: severity must be >= 0");
  LabelMap out = labels;
  if (spec.severity == 0.0) return out;

  Rng rng(spec.seed);
  const double sev = spec.severity;
  for (const Op& op : spec.ops) {
    switch (op.kind) {
      case Op::Kind::kErode: {
        const int r = static_cast<int>(std::lround(op.radius * sev));
        for (int k = 0; k < r; ++k) erode_once(out);
        break;
      }
      case Op::Kind::kDilate: {
        const int r = static_cast<int>(std::lround(op.radius * sev));
        for (int k = 0; k < r; ++k) dilate_once(out);
        break;
      }
      case Op::Kind::kTranslate:
        apply_translate(out, static_cast<int>(std::lround(op.dx * sev)),
                        static_cast<int>(std::lround(op.dy * sev)),
                        static_cast<int>(std::lround(op.dz * sev)));
        break;
      case Op::Kind::kDropClass:
        apply_drop(out, op.class_id, std::min(1.0, op.fraction * sev), rng);
        break;
      case Op::Kind::kBoundaryNoise:
        apply_boundary_noise(out, std::min(1.0, op.prob * sev), rng);
        break;
      case Op::Kind::kSwapRegion:
        apply_swap(out, std::min(1.0, op.fraction * sev), rng);
        break;
      default:
        throw ConfigError("corrupt: unknown operator");
    }
  }
  return out;
}

}  // namespace segqc
