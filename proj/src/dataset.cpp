#include "segqc/dataset.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "segqc/binning.hpp"
#include "segqc/io.hpp"

namespace segqc {

namespace fs = std::filesystem;

std::string Manifest::resolve(const std::string& rel) const {
  if (dir.empty()) return rel;
  return (fs::path(dir) / rel).string();
}

namespace {

constexpr const char* kBaseColumns =
    "case_id,image,seg,gt,dsc_bg,dsc_lvc,dsc_lvm,dsc_rvc,dsc_wh,severity,seed";
constexpr const char* kRcaColumns = ",rca_bg,rca_lvc,rca_lvm,rca_rvc,rca_wh,rca_ms";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& ctx) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError("manifest: bad number \"" + s + "\" in " + ctx);
  }
}

std::string fmt_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

Manifest load_manifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DataError("cannot open manifest: " + path);
  Manifest m;
  m.dir = fs::path(path).parent_path().string();

  std::string line;
  if (!std::getline(f, line)) throw DataError("manifest is empty: " + path);
  const bool with_rca = line == std::string(kBaseColumns) + kRcaColumns;
  if (!with_rca && line != kBaseColumns)
    throw DataError("manifest " + path + " has unexpected header: " + line);

  const std::size_t want = with_rca ? 17 : 11;
  std::size_t lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto c = split_csv(line);
    const std::string ctx = path + ":" + std::to_string(lineno);
    if (c.size() != want)
      throw DataError("manifest: expected " + std::to_string(want) + " columns in " + ctx);
    ManifestRow r;
    r.case_id = c[0];
    r.image = c[1];
    r.seg = c[2];
    r.gt = c[3];
    for (int k = 0; k < kNumScores; ++k) r.dsc[k] = parse_double(c[4 + k], ctx);
    r.severity = parse_double(c[9], ctx);
    try {
      r.seed = std::stoull(c[10]);
    } catch (const std::exception&) {
      throw DataError("manifest: bad seed in " + ctx);
    }
    if (with_rca) {
      r.has_rca = true;
      for (int k = 0; k < kNumScores; ++k) r.rca[k] = parse_double(c[11 + k], ctx);
      r.rca_ms = parse_double(c[16], ctx);
    }
    m.rows.push_back(std::move(r));
  }
  if (m.rows.empty()) throw DataError("manifest has no rows: " + path);
  return m;
}

void save_manifest(const std::string& path, const Manifest& m) {
  const bool with_rca = !m.rows.empty() && m.rows.front().has_rca;
  for (const auto& r : m.rows)
    if (r.has_rca != with_rca)
      throw DataError("save_manifest: mixed rca/non-rca rows");

  std::ofstream f(path, std::ios::trunc);
  if (!f) throw DataError("cannot open for writing: " + path);
  f << kBaseColumns << (with_rca ? kRcaColumns : "") << "\n";
  char buf[64];
  for (const auto& r : m.rows) {
    f << r.case_id << ',' << r.image << ',' << r.seg << ',' << r.gt;
    for (int k = 0; k < kNumScores; ++k) f << ',' << fmt_score(r.dsc[k]);
    std::snprintf(buf, sizeof(buf), ",%.9g,%" PRIu64, r.severity, r.seed);
    f << buf;
    if (with_rca) {
      for (int k = 0; k < kNumScores; ++k) f << ',' << fmt_score(r.rca[k]);
      std::snprintf(buf, sizeof(buf), ",%.3f", r.rca_ms);
      f << buf;
    }
    f << "\n";
  }
  if (!f) throw DataError("write failed: " + path);
}

namespace {

CorruptionSpec draw_row_corruption(const CorruptionRecipe& rc, double severity,
                                   std::uint64_t row_seed, const LabelMap& gt) {
  Rng rng(row_seed);
  CorruptionSpec spec;
  spec.severity = severity;
  spec.seed = derive_seed(row_seed, 7);

  // translation direction in-plane, damped along z
  const double phi = rng.uniform(0.0, 6.283185307179586477);
  const double dz = rc.translate_z * rng.uniform(-1.0, 1.0);
  spec.ops.push_back(translate(rc.translate * std::cos(phi), rc.translate * std::sin(phi),
                               rc.translate * dz));

  spec.ops.push_back(rng.bernoulli(rc.dilate_prob) ? dilate(rc.morph_radius)
                                                   : erode(rc.morph_radius));
  spec.ops.push_back(boundary_noise(rc.boundary_noise));

  if (rng.bernoulli(rc.drop_prob)) {
    bool present[kNumClasses] = {};
    for (std::int64_t i = 0; i < gt.size(); ++i) present[gt.data[i]] = true;
    std::vector<int> fg;
    for (int c = 1; c < kNumClasses; ++c)
      if (present[c]) fg.push_back(c);
    if (!fg.empty())
      spec.ops.push_back(drop_class(fg[rng.uniform_index(fg.size())], rc.drop_fraction));
  }
  if (rng.bernoulli(rc.swap_prob)) spec.ops.push_back(swap_region(rc.swap_fraction));
  return spec;
}

}  // namespace

Manifest build_dataset(const DatasetConfig& cfg, const std::string& out_dir) {
  if (cfg.n_cases < 1) throw ConfigError("build_dataset: n_cases must be >= 1");
  if (cfg.ladder.empty()) throw ConfigError("build_dataset: severity ladder is empty");
  for (std::size_t i = 1; i < cfg.ladder.size(); ++i)
    if (cfg.ladder[i] < cfg.ladder[i - 1])
      throw ConfigError("build_dataset: severity ladder must be non-decreasing");

  fs::create_directories(fs::path(out_dir) / "cases");

  Manifest m;
  m.dir = out_dir;

  const auto add_case = [&](int ci) {
    char name[32];
    std::snprintf(name, sizeof(name), "c%04d", ci);
    Rng case_rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(ci)));
    PhantomSpec spec = sample_phantom_spec(cfg.phantom, cfg.grid, cfg.spacing, case_rng);
    spec.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(ci), 1);
    const auto [img, gt] = generate_phantom(spec);

    const std::string img_rel = std::string("cases/") + name + "_img";
    const std::string gt_rel = std::string("cases/") + name + "_gt";
    save_volume(m.resolve(img_rel), img);
    save_labelmap(m.resolve(gt_rel), gt);

    for (std::size_t r = 0; r < cfg.ladder.size(); ++r) {
      const std::uint64_t row_seed =
          derive_seed(cfg.seed, static_cast<std::uint64_t>(ci), 2 + r);
      const CorruptionSpec cs =
          draw_row_corruption(cfg.recipe, cfg.ladder[r], row_seed, gt);
      const LabelMap seg = corrupt(gt, cs);

      char seg_name[48];
      std::snprintf(seg_name, sizeof(seg_name), "cases/%s_s%02zu", name, r);
      save_labelmap(m.resolve(seg_name), seg);

      ManifestRow row;
      row.case_id = name;
      row.image = img_rel;
      row.seg = seg_name;
      row.gt = gt_rel;
      row.dsc = dice_all(seg, gt);
      row.severity = cfg.ladder[r];
      row.seed = cs.seed;
      m.rows.push_back(std::move(row));
    }
  };

  for (int ci = 0; ci < cfg.n_cases; ++ci) add_case(ci);

  // WH DSC decile coverage; top up with extra cases if allowed
  int extra = 0;
  for (;;) {
    std::vector<double> wh;
    wh.reserve(m.rows.size());
    for (const auto& r : m.rows) wh.push_back(r.dsc[kWh]);
    const BinnedHistogram h = bin_scores(wh);
    std::string short_bins;
    for (int b = 0; b < kNumBins; ++b)
      if (h.counts[b] < cfg.min_per_bin)
        short_bins += (short_bins.empty() ? "" : ", ") + std::to_string(b) + " (" +
                      std::to_string(h.counts[b]) + ")";
    if (short_bins.empty()) break;
    if (!cfg.regenerate_on_shortfall || extra >= cfg.max_extra_cases)
      throw DataError("build_dataset: bins under min_per_bin=" +
                      std::to_string(cfg.min_per_bin) + ": " + short_bins);
    add_case(cfg.n_cases + extra);
    ++extra;
  }

  save_manifest((fs::path(out_dir) / "manifest.csv").string(), m);
  return m;
}

}  // namespace segqc
