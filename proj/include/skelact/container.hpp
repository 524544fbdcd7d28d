#pragma once

#include <map>
#include <string>
#include <vector>

#include "skelact/sequence.hpp"

namespace skelact {

// A dataset: samples plus named index splits. Splits are persisted in a
// JSON sidecar next to the binary container.
struct DatasetContainer {
    std::vector<SkeletonSequence> samples;
    std::map<std::string, std::vector<size_t>> splits;
    int num_classes = 0;
};

// SKL1 binary layout (little-endian):
//   magic "SKL1", version u32, num_classes u32, sample count u64;
//   per sample: label u32, M u16, T u16, V u16, C u16,
//   flags u16 (bit0 has_conf, bit1 has_image_size, bit2 coord_type=3D),
//   [width u16, height u16 when bit1], coords f32 [M][T][V][C],
//   [conf f32 [M][T][V] when bit0].
// Splits live in "<path>.splits.json" as {"split": [indices...]}.
void save_container(const DatasetContainer& c, const std::string& path);
DatasetContainer load_container(const std::string& path);

std::string splits_sidecar_path(const std::string& container_path);

}  // namespace skelact
