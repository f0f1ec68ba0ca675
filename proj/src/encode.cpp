#include "segqc/encode.hpp"

namespace segqc {

OneHotStack one_hot_encode(const LabelMap& labels) {
  OneHotStack out;
  out.dims = labels.dims;
  out.channels.setZero(labels.size(), kNumClasses);
  for (std::int64_t i = 0; i < labels.size(); ++i) {
    const std::uint8_t c = labels.data[i];
    if (c >= kNumClasses)
      throw DataError("one_hot_encode: invalid class id " + std::to_string(int(c)) +
                      " at voxel " + std::to_string(i));
    out.channels(i, c) = 1.0f;
  }
  return out;
}

LabelMap argmax_decode(const OneHotStack& stack) {
  LabelMap out(stack.dims);
  for (std::int64_t i = 0; i < out.size(); ++i) {
    Eigen::Index best;
    stack.channels.row(i).maxCoeff(&best);
    out.data[i] = static_cast<std::uint8_t>(best);
  }
  return out;
}

InputTensor assemble_input(const Volume& image, const LabelMap& labels) {
  require_same_dims(image.dims, labels.dims, "assemble_input");
  if ((image.data < 0.0f).any() || (image.data > 1.0f).any())
    throw DataError("assemble_input: image intensities must lie in [0,1]; "
                    "run normalize_intensity first");
  InputTensor t;
  t.dims = image.dims;
  t.values.resize(image.size(), 5);
  t.values.col(0) = image.data.matrix();
  t.values.rightCols<kNumClasses>() = one_hot_encode(labels).channels;
  return t;
}

}  // namespace segqc
