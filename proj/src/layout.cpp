#include "skelact/layout.hpp"

#include "skelact/common.hpp"

namespace skelact {

int JointLayout::root() const {
    for (int v = 0; v < num_joints; ++v) {
        if (parent[v] == v) return v;
    }
    return -1;
}

bool JointLayout::is_tree() const {
    int r = root();
    if (r < 0) return false;
    for (int v = 0; v < num_joints; ++v) {
        if (parent[v] < 0 || parent[v] >= num_joints) return false;
        // Every joint must reach the root within V steps.
        int cur = v;
        int steps = 0;
        while (cur != r) {
            cur = parent[cur];
            if (++steps > num_joints) return false;
        }
    }
    return true;
}

JointLayout make_layout(std::string name, std::vector<int> parent, int center,
                        std::pair<int, int> spine) {
    JointLayout l;
    l.name = std::move(name);
    l.num_joints = static_cast<int>(parent.size());
    l.parent = std::move(parent);
    l.center = center;
    l.spine = spine;
    int r = l.root();
    if (r < 0 || !l.is_tree()) {
        throw SpecError("layout '" + l.name + "' parent array is not a rooted tree");
    }
    for (int v = 0; v < l.num_joints; ++v) {
        if (v != r) l.edges.emplace_back(v, l.parent[v]);
    }
    return l;
}

JointLayout builtin_layout(const std::string& name) {
    if (name == "ntu25") {
        // Kinect v2 joint order: 0 spine base (root), 1 spine mid, 2 neck,
        // 3 head, 4-7 left arm, 8-11 right arm, 12-15 left leg,
        // 16-19 right leg, 20 spine shoulder, 21/22 left hand tip/thumb,
        // 23/24 right hand tip/thumb.
        std::vector<int> parent = {
            0,  0,  20, 2,   // spine base, spine mid, neck, head
            20, 4,  5,  6,   // left shoulder, elbow, wrist, hand
            20, 8,  9,  10,  // right shoulder, elbow, wrist, hand
            0,  12, 13, 14,  // left hip, knee, ankle, foot
            0,  16, 17, 18,  // right hip, knee, ankle, foot
            1,               // spine shoulder
            7,  6,           // left hand tip, left thumb
            11, 10,          // right hand tip, right thumb
        };
        return make_layout("ntu25", std::move(parent), /*center=*/1, {0, 1});
    }
    if (name == "coco17") {
        // COCO keypoints rooted at the nose: 0 nose, 1/2 eyes, 3/4 ears,
        // 5/6 shoulders, 7/8 elbows, 9/10 wrists, 11/12 hips, 13/14 knees,
        // 15/16 ankles.
        std::vector<int> parent = {
            0,  0, 0,  1,  2,   // nose, eyes, ears
            0,  0,              // shoulders
            5,  6,              // elbows
            7,  8,              // wrists
            5,  6,              // hips
            11, 12,             // knees
            13, 14,             // ankles
        };
        return make_layout("coco17", std::move(parent), /*center=*/0, {11, 5});
    }
    throw NameError("unknown layout '" + name + "'");
}

}  // namespace skelact
