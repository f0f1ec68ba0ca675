#include "segqc/rca.hpp"

#include <chrono>

#include "segqc/io.hpp"
#include "segqc/parallel.hpp"
#include "segqc/resample.hpp"

namespace segqc {

ReferenceDB build_reference_db(int k, Dims3 grid, Spacing3 spacing,
                               const PhantomRanges& ranges, std::uint64_t seed,
                               NormalizeMode normalize) {
  if (k < 1) throw ConfigError("build_reference_db: db size must be >= 1");
  ReferenceDB db;
  db.images.reserve(k);
  db.labels.reserve(k);
  for (int i = 0; i < k; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    PhantomSpec spec = sample_phantom_spec(ranges, grid, spacing, rng);
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i), 1);
    auto [img, labels] = generate_phantom(spec);
    db.images.push_back(normalize_intensity(img, normalize));
    db.labels.push_back(std::move(labels));
  }
  return db;
}

RcaPrediction rca_predict(const Volume& test_img, const LabelMap& test_seg,
                          const ReferenceDB& db, int search_radius) {
  if (db.size() == 0) throw DataError("rca_predict: empty reference db");
  require_same_dims(test_img.dims, test_seg.dims, "rca_predict");

  RcaPrediction out;
  out.table.resize(static_cast<Eigen::Index>(db.size()), kNumScores);
  for (std::size_t k = 0; k < db.size(); ++k) {
    const Shift3 shift = register_translate(test_img, db.images[k], search_radius);
    const LabelMap propagated = propagate_labels(test_seg, shift);
    const QualityScore s = dice_all(propagated, db.labels[k]);
    for (int c = 0; c < kNumScores; ++c) out.table(static_cast<Eigen::Index>(k), c) = s[c];
  }
  for (int c = 0; c < kNumScores; ++c) {
    Eigen::Index best = 0;
    out.scores[c] = out.table.col(c).maxCoeff(&best);  // first max on ties
    out.argmax_ref[c] = static_cast<int>(best);
  }
  return out;
}

Manifest rca_label_dataset(const Manifest& manifest, const ReferenceDB& db,
                           int search_radius, NormalizeMode normalize, int jobs) {
  if (db.size() == 0) throw DataError("rca_label_dataset: empty reference db");
  Manifest out = manifest;
  const Dims3 grid = db.images.front().dims;

  parallel_for(static_cast<std::int64_t>(out.rows.size()), jobs, [&](std::int64_t i) {
    ManifestRow& row = out.rows[static_cast<std::size_t>(i)];
    const auto t0 = std::chrono::steady_clock::now();
    auto [img, seg] = load_case(out.resolve(row.image), out.resolve(row.seg));
    if (!(img.dims == grid)) {
      img = resample(img, grid, ResampleMode::kLinear);
      seg = resample(seg, grid, ResampleMode::kNearest);
    }
    const Volume norm = normalize_intensity(img, normalize);
    const RcaPrediction pred = rca_predict(norm, seg, db, search_radius);
    row.has_rca = true;
    row.rca = pred.scores;
    row.rca_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  });
  return out;
}

}  // namespace segqc
