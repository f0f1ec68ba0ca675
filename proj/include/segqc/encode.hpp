#pragma once

#include <Eigen/Core>

#include "segqc/grid.hpp"

namespace segqc {

/// 4 binary masks, one column per class in fixed order (BG, LVC, LVM, RVC).
/// Rows are voxels in x-fastest order; at every voxel exactly one column is 1.
struct OneHotStack {
  Dims3 dims;
  Eigen::Matrix<float, Eigen::Dynamic, kNumClasses> channels;
};

/// Network input: column 0 is the normalized image, columns 1-4 the one-hot
/// masks. Rows are voxels in x-fastest order.
struct InputTensor {
  Dims3 dims;
  Eigen::Matrix<float, Eigen::Dynamic, 5> values;
};

/// Expands a labelmap into per-class binary channels.
/// Throws DataError naming the first offending voxel if a class id is
/// outside {0..3}.
OneHotStack one_hot_encode(const LabelMap& labels);

/// Argmax over channels; exact inverse of one_hot_encode on valid input.
LabelMap argmax_decode(const OneHotStack& stack);

/// Stacks a normalized image and the one-hot channels of its segmentation.
/// The image must already lie in [0,1].
InputTensor assemble_input(const Volume& image, const LabelMap& labels);

}  // namespace segqc
