#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "segqc/error.hpp"

namespace segqc {

struct Dims3 {
  int nx = 0;
  int ny = 0;
  int nz = 0;

  std::int64_t count() const {
    return static_cast<std::int64_t>(nx) * ny * nz;
  }
  bool operator==(const Dims3&) const = default;
  std::string str() const {
    return std::to_string(nx) + "x" + std::to_string(ny) + "x" + std::to_string(nz);
  }
};

struct Spacing3 {
  double sx = 1.0;
  double sy = 1.0;
  double sz = 1.0;
  bool operator==(const Spacing3&) const = default;
};

/// Dense 3D scalar grid. Voxels are stored flat, row-major x-fastest:
/// linear index = x + nx*(y + ny*z).
template <typename Scalar>
struct Grid3 {
  using Storage = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  Dims3 dims;
  Spacing3 spacing;
  Storage data;

  Grid3() = default;
  Grid3(Dims3 d, Spacing3 s = {}) : dims(d), spacing(s), data(Storage::Zero(d.count())) {
    if (d.nx <= 0 || d.ny <= 0 || d.nz <= 0)
      throw DataError("Grid3: dims must be positive, got " + d.str());
  }

  std::int64_t index(int x, int y, int z) const {
    return static_cast<std::int64_t>(x) +
           static_cast<std::int64_t>(dims.nx) * (y + static_cast<std::int64_t>(dims.ny) * z);
  }
  bool in_bounds(int x, int y, int z) const {
    return x >= 0 && x < dims.nx && y >= 0 && y < dims.ny && z >= 0 && z < dims.nz;
  }

  Scalar& at(int x, int y, int z) { return data[index(x, y, z)]; }
  const Scalar& at(int x, int y, int z) const { return data[index(x, y, z)]; }

  std::int64_t size() const { return data.size(); }
};

using Volume = Grid3<float>;
using LabelMap = Grid3<std::uint8_t>;

// Class ids, fixed across the whole engine.
enum ClassId : std::uint8_t { kBg = 0, kLvc = 1, kLvm = 2, kRvc = 3 };
inline constexpr int kNumClasses = 4;
inline constexpr const char* kClassNames[5] = {"BG", "LVC", "LVM", "RVC", "WH"};

inline void require_same_dims(const Dims3& a, const Dims3& b, const char* what) {
  if (!(a == b))
    throw DataError(std::string(what) + ": dims mismatch (" + a.str() + " vs " + b.str() + ")");
}

}  // namespace segqc
