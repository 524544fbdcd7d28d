#pragma once

#include <array>

#include "skelact/rng.hpp"
#include "skelact/sequence.hpp"

namespace skelact {

// Knobs for the whole pre-processing/augmentation chain. Defaults are the
// published training values: 100-frame clips, rotation angles uniform in
// [-0.3, 0.3] rad, scale factors 1+r with r in [-0.1, 0.1] (3D) or
// [-0.2, 0.2] (2D), crop ratio in [0.5, 1.0] resized to 64 frames.
struct TransformConfig {
    int clip_len = 100;
    double rot_range = 0.3;
    double scale_range_3d = 0.1;
    double scale_range_2d = 0.2;
    double noise_sigma = 0.0;
    bool noise_frame_specific = true;
    double crop_ratio_lo = 0.5;
    double crop_ratio_hi = 1.0;
    int crop_out_len = 64;
};

// --- pre-processing -------------------------------------------------------

// Translates every joint of every person/frame so that person 1 frame 1's
// center joint sits at the origin, then applies the single rotation taking
// person 1 frame 1's spine direction onto +z. 3D only; a zero-length spine
// raises DegenerateInput.
SkeletonSequence pre_normalize_3d(const SkeletonSequence& seq);

// x' = (2x - w)/w, y' = (2y - h)/h. Requires image_size.
SkeletonSequence normalize_2d(const SkeletonSequence& seq);

SkeletonSequence pad_zero(const SkeletonSequence& seq, int t_max);
SkeletonSequence pad_loop(const SkeletonSequence& seq, int t_max);

// --- temporal sampling ----------------------------------------------------

// Divides [0, T) into `m_frames` equal spans and picks one verbatim frame
// per span: output i = input floor((i + u_i) * T / M), u_i ~ U[0,1).
SkeletonSequence uniform_sample(const SkeletonSequence& seq, int m_frames, Rng& rng);

// Deterministic test-time variant (u_i = 0.5).
SkeletonSequence uniform_sample_center(const SkeletonSequence& seq, int m_frames);

// Crops a contiguous substring (start/length split out for testing) and
// linearly interpolates it along time to `out_len` frames.
SkeletonSequence crop_resize(const SkeletonSequence& seq, int start, int len, int out_len);
SkeletonSequence random_crop_resize(const SkeletonSequence& seq,
                                    const TransformConfig& cfg, Rng& rng);

// --- spatial augmentation -------------------------------------------------

// Deterministic cores, exposed so draws and geometry test separately.
SkeletonSequence rotate_xyz(const SkeletonSequence& seq,
                            const std::array<double, 3>& angles);
SkeletonSequence scale_axes(const SkeletonSequence& seq,
                            const std::array<double, 3>& factors);

std::array<double, 3> draw_rotation_angles(const TransformConfig& cfg, Rng& rng);
std::array<double, 3> draw_scale_factors(const SkeletonSequence& seq,
                                         const TransformConfig& cfg, Rng& rng);

// One angle triple per call, R = Rz * Ry * Rx applied everywhere. 3D only.
SkeletonSequence random_rotate(const SkeletonSequence& seq,
                               const TransformConfig& cfg, Rng& rng);

// Per-axis factors 1 + r, range picked by coordinate type.
SkeletonSequence random_scale(const SkeletonSequence& seq,
                              const TransformConfig& cfg, Rng& rng);

// Frame-specific: independent noise per joint/frame/axis. Frame-agnostic:
// one offset per person/joint/axis shared by all frames.
SkeletonSequence random_gaussian_noise(const SkeletonSequence& seq,
                                       const TransformConfig& cfg, Rng& rng);

// --- stream derivation ----------------------------------------------------

// bone[v] = coords[v] - coords[parent[v]]; the root bone is zero.
SkeletonSequence bone_stream(const SkeletonSequence& seq);

// motion[t] = coords[t+1] - coords[t]; the last frame is zero.
SkeletonSequence motion_stream(const SkeletonSequence& seq);

}  // namespace skelact
