#include "segqc/io.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

#include <json.hpp>

namespace segqc {
namespace {

using nlohmann::json;

static_assert(sizeof(float) == 4, "f32 payloads require 4-byte float");

template <typename T>
void byteswap_in_place(std::vector<char>& buf) {
  if constexpr (sizeof(T) == 1) return;
  for (std::size_t i = 0; i + sizeof(T) <= buf.size(); i += sizeof(T))
    std::reverse(buf.begin() + i, buf.begin() + i + sizeof(T));
}

template <typename T>
void write_raw(const std::string& path, const T* data, std::int64_t n) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw DataError("cannot open for writing: " + path);
  if constexpr (sizeof(T) == 1) {
    f.write(reinterpret_cast<const char*>(data), n);
  } else if (std::endian::native == std::endian::little) {
    f.write(reinterpret_cast<const char*>(data), n * static_cast<std::int64_t>(sizeof(T)));
  } else {
    std::vector<char> buf(reinterpret_cast<const char*>(data),
                          reinterpret_cast<const char*>(data) + n * sizeof(T));
    byteswap_in_place<T>(buf);
    f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  if (!f) throw DataError("write failed: " + path);
}

template <typename T>
void read_raw(const std::string& path, T* data, std::int64_t n) {
  std::ifstream f(path, std::ios::binary | std::ios::ate);
  if (!f) throw DataError("cannot open: " + path);
  const std::int64_t bytes = static_cast<std::int64_t>(f.tellg());
  const std::int64_t expected = n * static_cast<std::int64_t>(sizeof(T));
  if (bytes != expected)
    throw DataError("payload size mismatch in " + path + ": expected " +
                    std::to_string(expected) + " bytes (" + std::to_string(n) +
                    " elements), found " + std::to_string(bytes));
  f.seekg(0);
  if (std::endian::native == std::endian::little || sizeof(T) == 1) {
    f.read(reinterpret_cast<char*>(data), expected);
  } else {
    std::vector<char> buf(static_cast<std::size_t>(expected));
    f.read(buf.data(), expected);
    byteswap_in_place<T>(buf);
    std::memcpy(data, buf.data(), static_cast<std::size_t>(expected));
  }
  if (!f) throw DataError("read failed: " + path);
}

void write_header(const std::string& base, const Dims3& d, const Spacing3& s,
                  const char* dtype) {
  json h;
  h["dims"] = {d.nx, d.ny, d.nz};
  h["spacing"] = {s.sx, s.sy, s.sz};
  h["dtype"] = dtype;
  h["order"] = "x-fastest";
  std::ofstream f(base + ".hdr.json", std::ios::trunc);
  if (!f) throw DataError("cannot open for writing: " + base + ".hdr.json");
  f << h.dump(2) << "\n";
  if (!f) throw DataError("write failed: " + base + ".hdr.json");
}

struct Header {
  Dims3 dims;
  Spacing3 spacing;
  std::string dtype;
};

Header read_header(const std::string& base) {
  const std::string path = base + ".hdr.json";
  std::ifstream f(path);
  if (!f) throw DataError("cannot open: " + path);
  json h;
  try {
    f >> h;
  } catch (const json::exception& e) {
    throw DataError("bad header " + path + ": " + e.what());
  }
  Header out;
  try {
    const auto& dims = h.at("dims");
    out.dims = {dims.at(0).get<int>(), dims.at(1).get<int>(), dims.at(2).get<int>()};
    const auto& sp = h.at("spacing");
    out.spacing = {sp.at(0).get<double>(), sp.at(1).get<double>(), sp.at(2).get<double>()};
    out.dtype = h.at("dtype").get<std::string>();
    if (h.at("order").get<std::string>() != "x-fastest")
      throw DataError("unsupported voxel order in " + path);
  } catch (const json::exception& e) {
    throw DataError("bad header " + path + ": " + e.what());
  }
  if (out.dims.nx <= 0 || out.dims.ny <= 0 || out.dims.nz <= 0)
    throw DataError("non-positive dims in " + path);
  return out;
}

}  // namespace

void save_volume(const std::string& base, const Volume& v) {
  write_header(base, v.dims, v.spacing, "f32");
  write_raw(base + ".raw", v.data.data(), v.size());
}

void save_labelmap(const std::string& base, const LabelMap& m) {
  write_header(base, m.dims, m.spacing, "u8");
  write_raw(base + ".raw", m.data.data(), m.size());
}

Volume load_volume(const std::string& base) {
  const Header h = read_header(base);
  if (h.dtype != "f32")
    throw DataError("unknown or unexpected dtype \"" + h.dtype + "\" for volume " + base);
  Volume v(h.dims, h.spacing);
  read_raw(base + ".raw", v.data.data(), v.size());
  return v;
}

LabelMap load_labelmap(const std::string& base) {
  const Header h = read_header(base);
  if (h.dtype != "u8")
    throw DataError("unknown or unexpected dtype \"" + h.dtype + "\" for labelmap " + base);
  LabelMap m(h.dims, h.spacing);
  read_raw(base + ".raw", m.data.data(), m.size());
  for (std::int64_t i = 0; i < m.size(); ++i)
    if (m.data[i] >= kNumClasses)
      throw DataError("labelmap " + base + " holds class id " +
                      std::to_string(int(m.data[i])) + " at voxel " + std::to_string(i) +
                      "; valid ids are 0..3");
  return m;
}

std::pair<Volume, LabelMap> load_case(const std::string& image_base,
                                      const std::string& label_base) {
  Volume v = load_volume(image_base);
  LabelMap m = load_labelmap(label_base);
  require_same_dims(v.dims, m.dims, "load_case");
  return {std::move(v), std::move(m)};
}

void save_case(const std::string& image_base, const std::string& label_base,
               const Volume& v, const LabelMap& m) {
  require_same_dims(v.dims, m.dims, "save_case");
  save_volume(image_base, v);
  save_labelmap(label_base, m);
}

}  // namespace segqc
