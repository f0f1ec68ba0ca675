#include "segqc/nnet/arch.hpp"

namespace segqc {

void ArchSpec::validate() const {
  if (input_dims.nx <= 0 || input_dims.ny <= 0 || input_dims.nz <= 0)
    throw ConfigError("ArchSpec: input dims must be positive");
  if (stem_channels < 1) throw ConfigError("ArchSpec: stem_channels must be >= 1");
  if (block_channels.empty()) throw ConfigError("ArchSpec: need at least one block");
  if (block_channels.size() != block_strides.size())
    throw ConfigError("ArchSpec: block_channels and block_strides differ in length");
  Dims3 d = input_dims;
  for (std::size_t i = 0; i < block_channels.size(); ++i) {
    if (block_channels[i] < 1) throw ConfigError("ArchSpec: block channels must be >= 1");
    const int s = block_strides[i];
    if (s != 1 && s != 2) throw ConfigError("ArchSpec: block strides must be 1 or 2");
    if (s == 2) {
      if (d.nx % 2 || d.ny % 2 || d.nz % 2)
        throw ConfigError("ArchSpec: dims " + d.str() + " not divisible by the " +
                          "downsampling schedule at block " + std::to_string(i));
      d = {d.nx / 2, d.ny / 2, d.nz / 2};
    }
  }
}

nlohmann::json ArchSpec::to_json() const {
  return {{"input_dims", {input_dims.nx, input_dims.ny, input_dims.nz}},
          {"stem_channels", stem_channels},
          {"block_channels", block_channels},
          {"block_strides", block_strides}};
}

ArchSpec ArchSpec::from_json(const nlohmann::json& j) {
  ArchSpec a;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "input_dims") {
        a.input_dims = {value.at(0).get<int>(), value.at(1).get<int>(),
                        value.at(2).get<int>()};
      } else if (key == "stem_channels") {
        a.stem_channels = value.get<int>();
      } else if (key == "block_channels") {
        a.block_channels = value.get<std::vector<int>>();
      } else if (key == "block_strides") {
        a.block_strides = value.get<std::vector<int>>();
      } else {
        throw ConfigError("ArchSpec: unknown key \"" + key + "\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("ArchSpec: bad json: ") + e.what());
  }
  a.validate();
  return a;
}

}  // namespace segqc
