#pragma once

#include <string>
#include <utility>
#include <vector>

namespace skelact {

// Named joint topology. `parent` encodes a rooted tree (the root points at
// itself); `edges` lists every (child, parent) pair. `center` is the joint
// the spatial partitioning measures hop distance against, and `spine` is the
// (base, tip) pair whose direction 3D pre-normalization maps onto +z.
struct JointLayout {
    std::string name;
    int num_joints = 0;
    std::vector<int> parent;
    int center = 0;
    std::pair<int, int> spine{0, 1};
    std::vector<std::pair<int, int>> edges;  // (child, parent), child != root

    int root() const;
    bool is_tree() const;
};

// Builds the edge list from `parent`; used by the built-in layouts and by
// tests that synthesize random trees.
JointLayout make_layout(std::string name, std::vector<int> parent, int center,
                        std::pair<int, int> spine);

// "ntu25" (Kinect v2 25-joint) or "coco17" (COCO 17-keypoint).
// Unknown names raise NameError.
JointLayout builtin_layout(const std::string& name);

}  // namespace skelact
