#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skelact/layout.hpp"

namespace skelact {

enum class CoordType { two_d, three_d };

// Coordinates of M persons over T frames and V joints, with C channels per
// joint (2 for pixel/normalized 2D, 3 for metric 3D). The universal sample
// type every transform and the batch assembler consume. Immutable by
// convention: transforms return fresh copies.
struct SkeletonSequence {
    int persons = 0;   // M
    int frames = 0;    // T
    int joints = 0;    // V
    int channels = 0;  // C
    std::vector<float> coords;              // [M][T][V][C] row-major
    std::vector<float> conf;                // optional, [M][T][V]
    int label = 0;
    std::shared_ptr<const JointLayout> layout;
    CoordType coord_type = CoordType::three_d;
    std::optional<std::pair<uint16_t, uint16_t>> image_size;  // (width, height)

    bool has_conf() const { return !conf.empty(); }

    size_t coord_index(int m, int t, int v, int c) const {
        return ((static_cast<size_t>(m) * frames + t) * joints + v) * channels + c;
    }
    float& at(int m, int t, int v, int c) { return coords[coord_index(m, t, v, c)]; }
    float at(int m, int t, int v, int c) const { return coords[coord_index(m, t, v, c)]; }

    size_t conf_index(int m, int t, int v) const {
        return (static_cast<size_t>(m) * frames + t) * joints + v;
    }
    float& conf_at(int m, int t, int v) { return conf[conf_index(m, t, v)]; }
    float conf_at(int m, int t, int v) const { return conf[conf_index(m, t, v)]; }

    static SkeletonSequence make(int persons, int frames,
                                 std::shared_ptr<const JointLayout> layout,
                                 CoordType type, bool with_conf = false);
};

struct Violation {
    std::string invariant;  // short name of the failed invariant
    std::string detail;     // offending index / value
};

// Checks every SkeletonSequence invariant; empty result means the sample is
// well formed. Never throws.
std::vector<Violation> validate_sequence(const SkeletonSequence& seq);

}  // namespace skelact
