#pragma once

#include <Eigen/Core>

#include "segqc/grid.hpp"

namespace segqc {

// Score component order, everywhere: BG, LVC, LVM, RVC, WH.
inline constexpr int kNumScores = 5;
inline constexpr int kWh = 4;

/// Per-class Dice vector (BG, LVC, LVM, RVC, WH), each in [0,1].
using QualityScore = Eigen::Array<double, kNumScores, 1>;

/// Binary mask over a grid; 1 = member.
using Mask = Grid3<std::uint8_t>;

/// Extracts the binary mask of one class.
Mask class_mask(const LabelMap& labels, std::uint8_t class_id);

/// Union of all foreground classes (LVC, LVM, RVC): the whole-heart mask.
Mask foreground_mask(const LabelMap& labels);

/// Dice overlap 2|a∩b| / (|a|+|b|). Two empty masks agree perfectly: 1.0.
double dice(const Mask& a, const Mask& b);

/// Per-class Dice of pred vs gt plus the whole-heart Dice of the
/// foreground unions.
QualityScore dice_all(const LabelMap& pred, const LabelMap& gt);

}  // namespace segqc
