#include "skelact/synth.hpp"

#include <array>
#include <cmath>

#include "skelact/common.hpp"
#include "skelact/rng.hpp"

namespace skelact {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

std::array<double, 3> unit_direction(Rng& r) {
    // Rejection-free: normalize a Gaussian triple.
    double x = r.normal(), y = r.normal(), z = r.normal();
    double n = std::sqrt(x * x + y * y + z * z);
    if (n < 1e-12) return {1.0, 0.0, 0.0};
    return {x / n, y / n, z / n};
}
}  // namespace

std::vector<std::array<double, 3>> rest_pose(const JointLayout& layout) {
    const double bone_len = 0.25;
    int v = layout.num_joints;
    std::vector<std::array<double, 3>> pose(v, {0.0, 0.0, 0.0});
    // Walk the tree top-down; parents always precede children after enough
    // sweeps (depth <= V).
    std::vector<bool> placed(v, false);
    placed[layout.root()] = true;
    for (int sweep = 0; sweep < v; ++sweep) {
        for (int j = 0; j < v; ++j) {
            int p = layout.parent[j];
            if (placed[j] || !placed[p]) continue;
            Rng r = Rng::derive(fnv1a(layout.name), {0x9085u, static_cast<uint64_t>(j)});
            auto d = unit_direction(r);
            pose[j] = {pose[p][0] + bone_len * d[0], pose[p][1] + bone_len * d[1],
                       pose[p][2] + bone_len * d[2]};
            placed[j] = true;
        }
    }
    return pose;
}

SynthSpec SynthSpec::defaults(int num_classes) {
    SynthSpec s;
    s.num_classes = num_classes;
    s.layout = std::make_shared<const JointLayout>(builtin_layout("ntu25"));
    std::vector<int> arms = {4, 5, 6, 7, 8, 9, 10, 11};
    for (int c = 0; c < num_classes; ++c) {
        s.joints_per_class.push_back(arms);
        double lo = 0.03 + 0.03 * c;
        s.freq_range.push_back({lo, lo + 0.015});
        s.amp_range.push_back({0.10, 0.20});
    }
    s.noise_sigma = 0.02;
    s.frames = 64;
    s.persons = 1;
    return s;
}

void SynthSpec::validate() const {
    if (num_classes < 2) throw SpecError("synthetic spec needs at least 2 classes");
    if (!layout) throw SpecError("synthetic spec needs a layout");
    if (frames < 2) throw SpecError("synthetic spec needs frames >= 2");
    if (persons < 1) throw SpecError("synthetic spec needs persons >= 1");
    if (noise_sigma < 0) throw SpecError("noise_sigma must be >= 0");
    if (static_cast<int>(joints_per_class.size()) != num_classes ||
        static_cast<int>(freq_range.size()) != num_classes ||
        static_cast<int>(amp_range.size()) != num_classes) {
        throw SpecError("per-class fields must have num_classes entries");
    }
    for (int c = 0; c < num_classes; ++c) {
        auto [lo, hi] = freq_range[c];
        if (!(lo > 0 && hi >= lo)) throw SpecError("bad frequency range");
        for (int j : joints_per_class[c]) {
            if (j < 0 || j >= layout->num_joints) throw SpecError("driven joint out of range");
        }
        // Separability guarantee: frequency ranges of distinct classes are disjoint.
        for (int d = 0; d < c; ++d) {
            auto [lo2, hi2] = freq_range[d];
            if (!(hi < lo2 || hi2 < lo)) {
                throw SpecError("frequency ranges of classes " + std::to_string(d) +
                                " and " + std::to_string(c) + " overlap");
            }
        }
    }
}

DatasetContainer generate_synthetic(const SynthSpec& spec, int n_per_class, uint64_t seed) {
    spec.validate();
    if (n_per_class < 1) throw SpecError("n_per_class must be >= 1");

    DatasetContainer out;
    out.num_classes = spec.num_classes;
    auto rest = rest_pose(*spec.layout);
    const int v_count = spec.layout->num_joints;

    for (int cls = 0; cls < spec.num_classes; ++cls) {
        // Class-level draws: one frequency and one amplitude per class, so
        // all samples of a class share a spectrum.
        Rng cls_rng = Rng::derive(seed, {0xC1A55u, static_cast<uint64_t>(cls)});
        double freq = cls_rng.uniform(spec.freq_range[cls].first, spec.freq_range[cls].second);
        double amp = cls_rng.uniform(spec.amp_range[cls].first, spec.amp_range[cls].second);

        std::vector<bool> driven(v_count, false);
        std::vector<std::array<double, 3>> motion_dir(v_count, {0, 0, 0});
        for (int j : spec.joints_per_class[cls]) {
            driven[j] = true;
            Rng dr = Rng::derive(seed, {0xD14u, static_cast<uint64_t>(cls),
                                        static_cast<uint64_t>(j)});
            motion_dir[j] = unit_direction(dr);
        }

        for (int i = 0; i < n_per_class; ++i) {
            Rng r = Rng::derive(seed, {0x5A3Bu, static_cast<uint64_t>(cls),
                                       static_cast<uint64_t>(i)});
            double phase = r.uniform(0.0, kTwoPi);

            auto s = SkeletonSequence::make(
                spec.persons, spec.frames, spec.layout, CoordType::three_d);
            s.label = cls;
            for (int m = 0; m < spec.persons; ++m) {
                double person_shift = 1.0 * m;  // keep persons apart on x
                for (int t = 0; t < spec.frames; ++t) {
                    double wave = std::sin(kTwoPi * freq * t + phase);
                    for (int j = 0; j < v_count; ++j) {
                        for (int c = 0; c < 3; ++c) {
                            double x = rest[j][c];
                            if (c == 0) x += person_shift;
                            if (driven[j]) x += amp * wave * motion_dir[j][c];
                            if (spec.noise_sigma > 0) x += r.normal(spec.noise_sigma);
                            s.at(m, t, j, c) = static_cast<float>(x);
                        }
                    }
                }
            }
            out.samples.push_back(std::move(s));
        }
    }

    // Stratified 80/20 split in generation order.
    std::vector<size_t> train, test;
    for (int cls = 0; cls < spec.num_classes; ++cls) {
        size_t base = static_cast<size_t>(cls) * n_per_class;
        int n_train = static_cast<int>(std::floor(0.8 * n_per_class));
        for (int i = 0; i < n_per_class; ++i) {
            (i < n_train ? train : test).push_back(base + i);
        }
    }
    out.splits["train"] = std::move(train);
    out.splits["test"] = std::move(test);
    return out;
}

}  // namespace skelact
