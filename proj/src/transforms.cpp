#include "skelact/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "skelact/common.hpp"

namespace skelact {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 matmul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

SkeletonSequence apply_linear(const SkeletonSequence& seq, const Mat3& m) {
    SkeletonSequence out = seq;
    for (int p = 0; p < seq.persons; ++p)
        for (int t = 0; t < seq.frames; ++t)
            for (int v = 0; v < seq.joints; ++v) {
                double x = seq.at(p, t, v, 0);
                double y = seq.at(p, t, v, 1);
                double z = seq.at(p, t, v, 2);
                out.at(p, t, v, 0) = static_cast<float>(m[0][0] * x + m[0][1] * y + m[0][2] * z);
                out.at(p, t, v, 1) = static_cast<float>(m[1][0] * x + m[1][1] * y + m[1][2] * z);
                out.at(p, t, v, 2) = static_cast<float>(m[2][0] * x + m[2][1] * y + m[2][2] * z);
            }
    return out;
}

SkeletonSequence take_frames(const SkeletonSequence& seq, const std::vector<int>& idx) {
    SkeletonSequence out = seq;
    out.frames = static_cast<int>(idx.size());
    out.coords.resize(static_cast<size_t>(out.persons) * out.frames * out.joints * out.channels);
    if (seq.has_conf()) {
        out.conf.resize(static_cast<size_t>(out.persons) * out.frames * out.joints);
    }
    for (int p = 0; p < out.persons; ++p)
        for (int t = 0; t < out.frames; ++t) {
            int src = idx[t];
            for (int v = 0; v < out.joints; ++v) {
                for (int c = 0; c < out.channels; ++c) {
                    out.at(p, t, v, c) = seq.at(p, src, v, c);
                }
                if (seq.has_conf()) out.conf_at(p, t, v) = seq.conf_at(p, src, v);
            }
        }
    return out;
}

}  // namespace

SkeletonSequence pre_normalize_3d(const SkeletonSequence& seq) {
    if (seq.coord_type != CoordType::three_d) {
        throw CoordTypeError("pre_normalize_3d needs 3D coordinates");
    }
    const JointLayout& lay = *seq.layout;

    double cx = seq.at(0, 0, lay.center, 0);
    double cy = seq.at(0, 0, lay.center, 1);
    double cz = seq.at(0, 0, lay.center, 2);

    SkeletonSequence out = seq;
    for (int p = 0; p < seq.persons; ++p)
        for (int t = 0; t < seq.frames; ++t)
            for (int v = 0; v < seq.joints; ++v) {
                out.at(p, t, v, 0) = static_cast<float>(seq.at(p, t, v, 0) - cx);
                out.at(p, t, v, 1) = static_cast<float>(seq.at(p, t, v, 1) - cy);
                out.at(p, t, v, 2) = static_cast<float>(seq.at(p, t, v, 2) - cz);
            }

    // Rotation taking the first frame's spine direction onto +z, computed
    // once and applied everywhere (Rodrigues form).
    auto [base, tip] = lay.spine;
    double sx = out.at(0, 0, tip, 0) - out.at(0, 0, base, 0);
    double sy = out.at(0, 0, tip, 1) - out.at(0, 0, base, 1);
    double sz = out.at(0, 0, tip, 2) - out.at(0, 0, base, 2);
    double norm = std::sqrt(sx * sx + sy * sy + sz * sz);
    if (norm < 1e-9) {
        throw DegenerateInput("zero-length spine vector in first frame");
    }
    sx /= norm;
    sy /= norm;
    sz /= norm;

    // axis = spine x z, angle between spine and z.
    double ax = sy * 1.0;   // (s x e_z) = (sy, -sx, 0)
    double ay = -sx * 1.0;
    double az = 0.0;
    double axis_norm = std::sqrt(ax * ax + ay * ay + az * az);
    double cos_t = sz;  // s . e_z

    Mat3 rot{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    if (axis_norm < 1e-12) {
        if (cos_t < 0) {
            // Spine anti-parallel to z: half-turn about x.
            rot = {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
        }
    } else {
        ax /= axis_norm;
        ay /= axis_norm;
        az /= axis_norm;
        double sin_t = axis_norm;  // |s x z| with unit inputs
        double c = cos_t, s = sin_t, ic = 1.0 - c;
        rot = {{{c + ax * ax * ic, ax * ay * ic - az * s, ax * az * ic + ay * s},
                {ay * ax * ic + az * s, c + ay * ay * ic, ay * az * ic - ax * s},
                {az * ax * ic - ay * s, az * ay * ic + ax * s, c + az * az * ic}}};
    }
    return apply_linear(out, rot);
}

SkeletonSequence normalize_2d(const SkeletonSequence& seq) {
    if (seq.coord_type != CoordType::two_d) {
        throw CoordTypeError("normalize_2d needs 2D coordinates");
    }
    if (!seq.image_size) {
        throw MissingMetadata("normalize_2d needs image_size");
    }
    double w = seq.image_size->first;
    double h = seq.image_size->second;
    SkeletonSequence out = seq;
    for (int p = 0; p < seq.persons; ++p)
        for (int t = 0; t < seq.frames; ++t)
            for (int v = 0; v < seq.joints; ++v) {
                out.at(p, t, v, 0) = static_cast<float>((2.0 * seq.at(p, t, v, 0) - w) / w);
                out.at(p, t, v, 1) = static_cast<float>((2.0 * seq.at(p, t, v, 1) - h) / h);
            }
    return out;
}

SkeletonSequence pad_zero(const SkeletonSequence& seq, int t_max) {
    if (seq.frames > t_max) {
        throw LengthError("sequence length " + std::to_string(seq.frames) +
                          " exceeds pad target " + std::to_string(t_max));
    }
    SkeletonSequence out = seq;
    out.frames = t_max;
    out.coords.assign(static_cast<size_t>(out.persons) * t_max * out.joints * out.channels, 0.0f);
    if (seq.has_conf()) {
        out.conf.assign(static_cast<size_t>(out.persons) * t_max * out.joints, 0.0f);
    }
    for (int p = 0; p < seq.persons; ++p)
        for (int t = 0; t < seq.frames; ++t)
            for (int v = 0; v < seq.joints; ++v) {
                for (int c = 0; c < seq.channels; ++c) out.at(p, t, v, c) = seq.at(p, t, v, c);
                if (seq.has_conf()) out.conf_at(p, t, v) = seq.conf_at(p, t, v);
            }
    return out;
}

SkeletonSequence pad_loop(const SkeletonSequence& seq, int t_max) {
    if (seq.frames > t_max) {
        throw LengthError("sequence length " + std::to_string(seq.frames) +
                          " exceeds pad target " + std::to_string(t_max));
    }
    std::vector<int> idx(t_max);
    for (int t = 0; t < t_max; ++t) idx[t] = t % seq.frames;
    return take_frames(seq, idx);
}

SkeletonSequence uniform_sample(const SkeletonSequence& seq, int m_frames, Rng& rng) {
    std::vector<int> idx(m_frames);
    for (int i = 0; i < m_frames; ++i) {
        double u = rng.uniform();
        int k = static_cast<int>(std::floor((i + u) * seq.frames / m_frames));
        idx[i] = std::min(k, seq.frames - 1);
    }
    return take_frames(seq, idx);
}

SkeletonSequence uniform_sample_center(const SkeletonSequence& seq, int m_frames) {
    std::vector<int> idx(m_frames);
    for (int i = 0; i < m_frames; ++i) {
        int k = static_cast<int>(std::floor((i + 0.5) * seq.frames / m_frames));
        idx[i] = std::min(k, seq.frames - 1);
    }
    return take_frames(seq, idx);
}

SkeletonSequence crop_resize(const SkeletonSequence& seq, int start, int len, int out_len) {
    SkeletonSequence out = seq;
    out.frames = out_len;
    out.coords.resize(static_cast<size_t>(out.persons) * out_len * out.joints * out.channels);
    if (seq.has_conf()) {
        out.conf.resize(static_cast<size_t>(out.persons) * out_len * out.joints);
    }
    for (int t = 0; t < out_len; ++t) {
        double pos;
        if (out_len == 1) {
            pos = start + (len - 1) * 0.5;
        } else {
            pos = start + static_cast<double>(t) * (len - 1) / (out_len - 1);
        }
        int lo = static_cast<int>(std::floor(pos));
        int hi = std::min(lo + 1, start + len - 1);
        double w = pos - lo;
        for (int p = 0; p < out.persons; ++p)
            for (int v = 0; v < out.joints; ++v) {
                for (int c = 0; c < out.channels; ++c) {
                    double a = seq.at(p, lo, v, c);
                    double b = seq.at(p, hi, v, c);
                    out.at(p, t, v, c) = static_cast<float>(a + w * (b - a));
                }
                if (seq.has_conf()) {
                    double a = seq.conf_at(p, lo, v);
                    double b = seq.conf_at(p, hi, v);
                    out.conf_at(p, t, v) = static_cast<float>(a + w * (b - a));
                }
            }
    }
    return out;
}

SkeletonSequence random_crop_resize(const SkeletonSequence& seq,
                                    const TransformConfig& cfg, Rng& rng) {
    if (seq.frames < 2) throw LengthError("random_crop_resize needs T >= 2");
    double ratio = rng.uniform(cfg.crop_ratio_lo, cfg.crop_ratio_hi);
    int len = static_cast<int>(std::lround(ratio * seq.frames));
    len = std::clamp(len, 2, seq.frames);
    int start = static_cast<int>(rng.below(static_cast<uint64_t>(seq.frames - len + 1)));
    return crop_resize(seq, start, len, cfg.crop_out_len);
}

SkeletonSequence rotate_xyz(const SkeletonSequence& seq, const std::array<double, 3>& angles) {
    double cx = std::cos(angles[0]), sx = std::sin(angles[0]);
    double cy = std::cos(angles[1]), sy = std::sin(angles[1]);
    double cz = std::cos(angles[2]), sz = std::sin(angles[2]);
    Mat3 rx{{{1, 0, 0}, {0, cx, -sx}, {0, sx, cx}}};
    Mat3 ry{{{cy, 0, sy}, {0, 1, 0}, {-sy, 0, cy}}};
    Mat3 rz{{{cz, -sz, 0}, {sz, cz, 0}, {0, 0, 1}}};
    return apply_linear(seq, matmul(rz, matmul(ry, rx)));
}

SkeletonSequence scale_axes(const SkeletonSequence& seq, const std::array<double, 3>& factors) {
    SkeletonSequence out = seq;
    for (int p = 0; p < seq.persons; ++p)
        for (int t = 0; t < seq.frames; ++t)
            for (int v = 0; v < seq.joints; ++v)
                for (int c = 0; c < seq.channels; ++c) {
                    out.at(p, t, v, c) = static_cast<float>(seq.at(p, t, v, c) * factors[c]);
                }
    return out;
}

std::array<double, 3> draw_rotation_angles(const TransformConfig& cfg, Rng& rng) {
    double r = cfg.rot_range;
    return {rng.uniform(-r, r), rng.uniform(-r, r), rng.uniform(-r, r)};
}

std::array<double, 3> draw_scale_factors(const SkeletonSequence& seq,
                                         const TransformConfig& cfg, Rng& rng) {
    double r = seq.coord_type == CoordType::three_d ? cfg.scale_range_3d : cfg.scale_range_2d;
    std::array<double, 3> f{1.0, 1.0, 1.0};
    for (int c = 0; c < seq.channels; ++c) f[c] = 1.0 + rng.uniform(-r, r);
    return f;
}

SkeletonSequence random_rotate(const SkeletonSequence& seq, const TransformConfig& cfg,
                               Rng& rng) {
    if (seq.coord_type != CoordType::three_d) {
        throw CoordTypeError("random_rotate is defined for 3D skeletons only");
    }
    return rotate_xyz(seq, draw_rotation_angles(cfg, rng));
}

SkeletonSequence random_scale(const SkeletonSequence& seq, const TransformConfig& cfg,
                              Rng& rng) {
    return scale_axes(seq, draw_scale_factors(seq, cfg, rng));
}

SkeletonSequence random_gaussian_noise(const SkeletonSequence& seq,
                                       const TransformConfig& cfg, Rng& rng) {
    if (cfg.noise_sigma < 0) throw SpecError("noise_sigma must be >= 0");
    SkeletonSequence out = seq;
    if (cfg.noise_sigma == 0) return out;
    if (cfg.noise_frame_specific) {
        for (int p = 0; p < seq.persons; ++p)
            for (int t = 0; t < seq.frames; ++t)
                for (int v = 0; v < seq.joints; ++v)
                    for (int c = 0; c < seq.channels; ++c) {
                        out.at(p, t, v, c) = static_cast<float>(
                            seq.at(p, t, v, c) + rng.normal(cfg.noise_sigma));
                    }
    } else {
        for (int p = 0; p < seq.persons; ++p)
            for (int v = 0; v < seq.joints; ++v)
                for (int c = 0; c < seq.channels; ++c) {
                    double offset = rng.normal(cfg.noise_sigma);
                    for (int t = 0; t < seq.frames; ++t) {
                        out.at(p, t, v, c) = static_cast<float>(seq.at(p, t, v, c) + offset);
                    }
                }
    }
    return out;
}

SkeletonSequence bone_stream(const SkeletonSequence& seq) {
    const JointLayout& lay = *seq.layout;
    SkeletonSequence out = seq;
    for (int p = 0; p < seq.persons; ++p)
        for (int t = 0; t < seq.frames; ++t)
            for (int v = 0; v < seq.joints; ++v) {
                int par = lay.parent[v];
                for (int c = 0; c < seq.channels; ++c) {
                    out.at(p, t, v, c) = seq.at(p, t, v, c) - seq.at(p, t, par, c);
                }
            }
    return out;
}

SkeletonSequence motion_stream(const SkeletonSequence& seq) {
    SkeletonSequence out = seq;
    for (int p = 0; p < seq.persons; ++p)
        for (int t = 0; t < seq.frames; ++t)
            for (int v = 0; v < seq.joints; ++v)
                for (int c = 0; c < seq.channels; ++c) {
                    out.at(p, t, v, c) =
                        (t + 1 < seq.frames)
                            ? seq.at(p, t + 1, v, c) - seq.at(p, t, v, c)
                            : 0.0f;
                }
    return out;
}

}  // namespace skelact
