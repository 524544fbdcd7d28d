#include "skelact/sequence.hpp"

#include <cmath>

namespace skelact {

SkeletonSequence SkeletonSequence::make(int persons, int frames,
                                        std::shared_ptr<const JointLayout> layout,
                                        CoordType type, bool with_conf) {
    SkeletonSequence s;
    s.persons = persons;
    s.frames = frames;
    s.joints = layout ? layout->num_joints : 0;
    s.channels = type == CoordType::three_d ? 3 : 2;
    s.layout = std::move(layout);
    s.coord_type = type;
    s.coords.assign(static_cast<size_t>(persons) * frames * s.joints * s.channels, 0.0f);
    if (with_conf) {
        s.conf.assign(static_cast<size_t>(persons) * frames * s.joints, 1.0f);
    }
    return s;
}

std::vector<Violation> validate_sequence(const SkeletonSequence& seq) {
    std::vector<Violation> out;
    auto add = [&out](const std::string& inv, const std::string& detail) {
        out.push_back({inv, detail});
    };

    if (seq.persons < 1) add("persons", "M = " + std::to_string(seq.persons));
    if (seq.frames < 1) add("frames", "T = " + std::to_string(seq.frames));
    if (!seq.layout) {
        add("layout", "missing layout reference");
    } else if (seq.joints != seq.layout->num_joints) {
        add("joints", "V = " + std::to_string(seq.joints) + ", layout has " +
                          std::to_string(seq.layout->num_joints));
    }

    int want_c = seq.coord_type == CoordType::three_d ? 3 : 2;
    if (seq.channels != want_c) {
        add("channels/coord_type",
            "C = " + std::to_string(seq.channels) + " with " +
                (seq.coord_type == CoordType::three_d ? "three_d" : "two_d"));
    }

    size_t want_coords =
        static_cast<size_t>(seq.persons) * seq.frames * seq.joints * seq.channels;
    if (seq.persons >= 1 && seq.frames >= 1 && seq.coords.size() != want_coords) {
        add("coords size", std::to_string(seq.coords.size()) + " != " +
                               std::to_string(want_coords));
    } else {
        for (size_t i = 0; i < seq.coords.size(); ++i) {
            if (!std::isfinite(seq.coords[i])) {
                add("finite", "coords[" + std::to_string(i) + "]");
                break;
            }
        }
    }

    if (seq.has_conf()) {
        size_t want_conf = static_cast<size_t>(seq.persons) * seq.frames * seq.joints;
        if (seq.conf.size() != want_conf) {
            add("conf size",
                std::to_string(seq.conf.size()) + " != " + std::to_string(want_conf));
        } else {
            for (size_t i = 0; i < seq.conf.size(); ++i) {
                float v = seq.conf[i];
                if (!(v >= 0.0f && v <= 1.0f)) {
                    add("conf range", "conf[" + std::to_string(i) + "] = " + std::to_string(v));
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace skelact
