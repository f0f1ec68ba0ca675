#pragma once

#include <vector>

#include <json.hpp>

#include "segqc/grid.hpp"

namespace segqc {

inline constexpr int kInputChannels = 5;  // image + 4 one-hot masks

/// Residual regressor architecture. The trunk is
///   conv3(5 -> stem) -> norm -> relu
/// followed by one residual block per entry of block_channels:
///   y = relu(norm2(conv3(relu(norm1(conv3(x, stride))))) + skip(x))
/// where skip is the identity, or a strided 1x1 projection when the channel
/// count or stride changes. The head is global average pooling followed by
/// dense(channels -> 5) and a sigmoid, so outputs always lie in (0,1).
struct ArchSpec {
  Dims3 input_dims{32, 32, 8};
  int stem_channels = 8;
  std::vector<int> block_channels{8, 16, 32};
  std::vector<int> block_strides{1, 2, 2};

  int head_channels() const { return block_channels.back(); }

  /// Throws ConfigError on structural problems, including spatial dims not
  /// divisible by the downsampling schedule.
  void validate() const;

  nlohmann::json to_json() const;
  static ArchSpec from_json(const nlohmann::json& j);

  bool operator==(const ArchSpec&) const = default;
};

}  // namespace segqc
