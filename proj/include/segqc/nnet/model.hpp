#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segqc/encode.hpp"
#include "segqc/metrics.hpp"
#include "segqc/nnet/arch.hpp"
#include "segqc/nnet/layers.hpp"

namespace segqc {

/// Residual DSC regressor over one flat parameter vector with named tensor
/// views. Flat layout, in order:
///   stem.conv.w (5*27 x stem), stem.norm.gamma, stem.norm.beta,
///   per block i: conv1.w ((cin*27) x cout), norm1.gamma, norm1.beta,
///                conv2.w ((cout*27) x cout), norm2.gamma, norm2.beta,
///                proj.w (cin x cout, only when cin != cout or stride != 1),
///   head.dense.w (channels x 5), head.dense.b (5).
/// Weight matrices are stored column-major; conv kernels use fan-in-scaled
/// uniform init, norm gains start at 1, everything else at 0.
template <typename S>
class ModelT {
 public:
  using Vec = VecX<S>;
  using Mat = MatX<S>;
  using Pred = Eigen::Matrix<S, kNumScores, 1>;

  struct TensorInfo {
    std::string name;
    Eigen::Index rows = 0, cols = 0, offset = 0;
    Eigen::Index size() const { return rows * cols; }
  };

  ModelT(const ArchSpec& spec, std::uint64_t seed);

  const ArchSpec& spec() const { return spec_; }
  std::uint64_t init_seed() const { return seed_; }
  Eigen::Index param_count() const { return params_.size(); }
  Vec& params() { return params_; }
  const Vec& params() const { return params_; }
  const std::vector<TensorInfo>& tensors() const { return tensors_; }

  /// Per-sample activation caches plus backward scratch; reuse one per
  /// thread to avoid reallocation.
  struct Workspace {
    struct BlockWs {
      Mat cols1, h1, n1, a1;
      Mat cols2, h2, n2;
      Mat colsp, skip;
      Mat out;
      NormCache<S> c1, c2;
      Mat d_in, d_tmp, d_cols, d_branch;
    };
    Mat x0, cols0, h0, a0;
    NormCache<S> c0;
    std::vector<BlockWs> blocks;
    Vec pooled;
    Pred z, pred;
    Mat d_a, d_cols, d_x;
  };

  /// Forward pass on one sample; fills ws for a following backward().
  Pred forward(const InputTensor& input, Workspace& ws) const;

  /// Gradient of the loss wrt every parameter, given dLoss/dPred for the
  /// sample last passed through forward() with this ws. Overwrites grad.
  void backward(const Pred& dpred, Workspace& ws, Vec& grad) const;

  /// Checkpoint: <base>.arch.json + <base>.params.raw (f32, little-endian,
  /// flat layout above).
  void save(const std::string& base) const;
  static ModelT load(const std::string& base);

 private:
  Eigen::Map<const Mat> view(const Vec& v, int tensor) const;
  Eigen::Map<Mat> view(Vec& v, int tensor) const;

  ArchSpec spec_;
  std::uint64_t seed_ = 0;
  std::vector<TensorInfo> tensors_;
  // geometry: geoms_[0] = stem; per block: conv1, conv2
  std::vector<ConvGeom> geoms_;
  std::vector<ConvGeom> proj_geoms_;  // one per block; out_ch == 0 when identity
  // tensor table indices for fast lookup
  struct BlockIdx {
    int conv1, norm1g, norm1b, conv2, norm2g, norm2b, proj;  // proj = -1 if identity
  };
  int stem_w_ = 0, stem_g_ = 0, stem_b_ = 0;
  std::vector<BlockIdx> block_idx_;
  int dense_w_ = 0, dense_b_ = 0;
  Vec params_;
};

using RegressorModel = ModelT<float>;

extern template class ModelT<float>;
extern template class ModelT<double>;

/// Mean-squared-error over all B*5 entries plus its gradient wrt pred.
struct MseResult {
  double loss = 0.0;
  Eigen::Matrix<double, Eigen::Dynamic, kNumScores> dpred;
};
MseResult mse_loss(const Eigen::Matrix<double, Eigen::Dynamic, kNumScores>& pred,
                   const Eigen::Matrix<double, Eigen::Dynamic, kNumScores>& target);

}  // namespace segqc
