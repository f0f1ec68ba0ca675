#pragma once

#include <string>
#include <utility>

#include "segqc/grid.hpp"

namespace segqc {

// Portable case format. A grid is a pair of files sharing a base path:
//   <base>.hdr.json  UTF-8 JSON: dims [nx,ny,nz], spacing [sx,sy,sz],
//                    dtype "f32"|"u8", order "x-fastest"
//   <base>.raw       little-endian packed voxels, exactly nx*ny*nz elements
void save_volume(const std::string& base, const Volume& v);
void save_labelmap(const std::string& base, const LabelMap& m);

Volume load_volume(const std::string& base);
LabelMap load_labelmap(const std::string& base);

/// Loads an image/labelmap pair and checks that their dims agree.
std::pair<Volume, LabelMap> load_case(const std::string& image_base,
                                      const std::string& label_base);
void save_case(const std::string& image_base, const std::string& label_base,
               const Volume& v, const LabelMap& m);

}  // namespace segqc
