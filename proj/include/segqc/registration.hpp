#pragma once

#include "segqc/grid.hpp"

namespace segqc {

struct Shift3 {
  int dx = 0, dy = 0, dz = 0;
  bool operator==(const Shift3&) const = default;
};

/// Normalized cross-correlation between fixed and moving-placed-at-shift s,
/// over their overlap: fixed(x) is paired with moving(x - s). Sums are
/// accumulated in double, visiting overlap voxels x-fastest; that order is
/// part of the definition so independent implementations agree bit-exactly.
/// Degenerate cases (empty overlap, zero variance on either side) score 0.
double ncc_at_shift(const Volume& moving, const Volume& fixed, Shift3 s);

/// Exhaustive integer-shift search over the cube [-r, r]^3 maximizing NCC.
/// Ties are broken by smallest L1 shift, then lexicographic (dx, dy, dz).
Shift3 register_translate(const Volume& moving, const Volume& fixed, int search_radius);

/// Applies an integer shift to a labelmap: out(x) = atlas(x - s), with
/// out-of-grid regions filled with BG.
LabelMap propagate_labels(const LabelMap& atlas, Shift3 s);

}  // namespace segqc
