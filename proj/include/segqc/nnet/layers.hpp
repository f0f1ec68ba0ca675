#pragma once

#include <Eigen/Core>
#include <cmath>

#include "segqc/grid.hpp"

namespace segqc {

template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Feature maps are (voxels x channels) matrices, voxels in x-fastest order.
// Convolutions are expressed as one GEMM against an im2col patch matrix of
// shape (out_voxels x in_ch*k^3); patch column index = c*k^3 + (kz*k+ky)*k+kx.

struct ConvGeom {
  Dims3 in_dims, out_dims;
  int in_ch = 0, out_ch = 0;
  int kernel = 3;  // 3 (padded, same) or 1 (no padding)
  int stride = 1;

  Eigen::Index patch_len() const {
    return static_cast<Eigen::Index>(in_ch) * kernel * kernel * kernel;
  }
  Eigen::Index out_voxels() const { return out_dims.count(); }

  static ConvGeom make(Dims3 in, int in_ch, int out_ch, int kernel, int stride) {
    ConvGeom g;
    g.in_dims = in;
    g.in_ch = in_ch;
    g.out_ch = out_ch;
    g.kernel = kernel;
    g.stride = stride;
    g.out_dims = {in.nx / stride, in.ny / stride, in.nz / stride};
    return g;
  }
};

template <typename S>
void im2col(const ConvGeom& g, const MatX<S>& x, MatX<S>& cols) {
  const Dims3 in = g.in_dims, out = g.out_dims;
  const int k = g.kernel, s = g.stride, pad = g.kernel / 2;
  cols.resize(g.out_voxels(), g.patch_len());
  for (int c = 0; c < g.in_ch; ++c) {
    const S* src = x.col(c).data();
    for (int kz = 0; kz < k; ++kz)
      for (int ky = 0; ky < k; ++ky)
        for (int kx = 0; kx < k; ++kx) {
          S* dst = cols.col(static_cast<Eigen::Index>(c) * k * k * k +
                            (kz * k + ky) * k + kx)
                       .data();
          Eigen::Index r = 0;
          for (int oz = 0; oz < out.nz; ++oz) {
            const int iz = oz * s + kz - pad;
            for (int oy = 0; oy < out.ny; ++oy) {
              const int iy = oy * s + ky - pad;
              if (iz < 0 || iz >= in.nz || iy < 0 || iy >= in.ny) {
                for (int ox = 0; ox < out.nx; ++ox) dst[r++] = S(0);
                continue;
              }
              const S* row = src + (static_cast<Eigen::Index>(iz) * in.ny + iy) * in.nx;
              for (int ox = 0; ox < out.nx; ++ox) {
                const int ix = ox * s + kx - pad;
                dst[r++] = (ix >= 0 && ix < in.nx) ? row[ix] : S(0);
              }
            }
          }
        }
  }
}

/// Scatter-adds patch-matrix gradients back onto the input grid.
/// dx must be sized (in_voxels x in_ch) and zeroed by the caller.
template <typename S>
void col2im_add(const ConvGeom& g, const MatX<S>& dcols, MatX<S>& dx) {
  const Dims3 in = g.in_dims, out = g.out_dims;
  const int k = g.kernel, s = g.stride, pad = g.kernel / 2;
  for (int c = 0; c < g.in_ch; ++c) {
    S* dst = dx.col(c).data();
    for (int kz = 0; kz < k; ++kz)
      for (int ky = 0; ky < k; ++ky)
        for (int kx = 0; kx < k; ++kx) {
          const S* src = dcols.col(static_cast<Eigen::Index>(c) * k * k * k +
                                   (kz * k + ky) * k + kx)
                             .data();
          Eigen::Index r = 0;
          for (int oz = 0; oz < out.nz; ++oz) {
            const int iz = oz * s + kz - pad;
            for (int oy = 0; oy < out.ny; ++oy) {
              const int iy = oy * s + ky - pad;
              if (iz < 0 || iz >= in.nz || iy < 0 || iy >= in.ny) {
                r += out.nx;
                continue;
              }
              S* row = dst + (static_cast<Eigen::Index>(iz) * in.ny + iy) * in.nx;
              for (int ox = 0; ox < out.nx; ++ox, ++r) {
                const int ix = ox * s + kx - pad;
                if (ix >= 0 && ix < in.nx) row[ix] += src[r];
              }
            }
          }
        }
  }
}

// w is (patch_len x out_ch); y gets (out_voxels x out_ch)
template <typename S>
void conv_forward(const ConvGeom& g, const MatX<S>& x, const MatX<S>& w, MatX<S>& cols,
                  MatX<S>& y) {
  im2col(g, x, cols);
  y.noalias() = cols * w;
}

template <typename S>
void conv_backward(const ConvGeom& g, const MatX<S>& cols, const MatX<S>& w,
                   const MatX<S>& dy, Eigen::Ref<MatX<S>> dw, MatX<S>& dcols,
                   MatX<S>& dx) {
  dw.noalias() = cols.transpose() * dy;
  dcols.noalias() = dy * w.transpose();
  dx.setZero(g.in_dims.count(), g.in_ch);
  col2im_add(g, dcols, dx);
}

/// Per-channel normalization over the voxels of a single sample
/// (batch-free, so results are identical at any batch size).
template <typename S>
struct NormCache {
  MatX<S> xhat;
  VecX<S> invstd;
};

template <typename S>
void instnorm_forward(const MatX<S>& x, const Eigen::Ref<const VecX<S>>& gamma,
                      const Eigen::Ref<const VecX<S>>& beta, MatX<S>& y,
                      NormCache<S>& cache) {
  const S eps = S(1e-5);
  const Eigen::Index n = x.rows(), ch = x.cols();
  y.resize(n, ch);
  cache.xhat.resize(n, ch);
  cache.invstd.resize(ch);
  for (Eigen::Index c = 0; c < ch; ++c) {
    const S mu = x.col(c).mean();
    const S var = (x.col(c).array() - mu).square().sum() / S(n);
    const S invstd = S(1) / std::sqrt(var + eps);
    cache.invstd[c] = invstd;
    cache.xhat.col(c) = (x.col(c).array() - mu).matrix() * invstd;
    y.col(c) = cache.xhat.col(c) * gamma[c];
    y.col(c).array() += beta[c];
  }
}

template <typename S>
void instnorm_backward(const MatX<S>& dy, const Eigen::Ref<const VecX<S>>& gamma,
                       const NormCache<S>& cache, MatX<S>& dx,
                       Eigen::Ref<VecX<S>> dgamma, Eigen::Ref<VecX<S>> dbeta) {
  const Eigen::Index n = dy.rows(), ch = dy.cols();
  dx.resize(n, ch);
  for (Eigen::Index c = 0; c < ch; ++c) {
    dbeta[c] = dy.col(c).sum();
    dgamma[c] = dy.col(c).dot(cache.xhat.col(c));
    // dxhat = dy * gamma; dx = invstd/n * (n*dxhat - sum(dxhat) - xhat*sum(dxhat.xhat))
    const S g = gamma[c];
    const S sum_d = dbeta[c] * g;
    const S sum_dx = dgamma[c] * g;
    dx.col(c) = (cache.invstd[c] / S(n)) *
                (S(n) * g * dy.col(c).array() - sum_d - cache.xhat.col(c).array() * sum_dx)
                    .matrix();
  }
}

template <typename S>
void relu_forward(const MatX<S>& x, MatX<S>& y) {
  y = x.cwiseMax(S(0));
}

template <typename S>
void relu_backward(const MatX<S>& dy, const MatX<S>& y, MatX<S>& dx) {
  dx = (y.array() > S(0)).select(dy, MatX<S>::Zero(dy.rows(), dy.cols()));
}

template <typename S>
void gap_forward(const MatX<S>& x, VecX<S>& pooled) {
  pooled = x.colwise().mean().transpose();
}

template <typename S>
void gap_backward(const VecX<S>& dpooled, Eigen::Index voxels, MatX<S>& dx) {
  dx = (VecX<S>::Constant(voxels, S(1) / S(voxels)) * dpooled.transpose());
}

}  // namespace segqc
