#pragma once

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "skelact/container.hpp"
#include "skelact/sequence.hpp"

namespace skelact {

// Synthetic motion-class dataset: every class oscillates a joint subset at
// a class-specific frequency (ranges disjoint across classes), so the
// classes are separable only through temporal structure. Amplitude is also
// drawn once per class; within a class, noise-free samples differ only in
// phase.
struct SynthSpec {
    int num_classes = 4;
    std::vector<std::vector<int>> joints_per_class;       // driven joint subsets
    std::vector<std::pair<double, double>> freq_range;    // cycles/frame, per class
    std::vector<std::pair<double, double>> amp_range;     // coordinate units, per class
    double noise_sigma = 0.02;
    int frames = 64;   // T
    int persons = 1;   // M
    std::shared_ptr<const JointLayout> layout;

    // 4 classes driving both arms of the ntu25 layout at disjoint
    // frequencies, desk-scale defaults.
    static SynthSpec defaults(int num_classes = 4);

    void validate() const;  // throws SpecError
};

// Deterministic in (spec, n_per_class, seed). Produces stratified 80/20
// "train"/"test" splits.
DatasetContainer generate_synthetic(const SynthSpec& spec, int n_per_class, uint64_t seed);

// Canonical rest pose for a layout: root at the origin, every child offset
// from its parent by a unit direction derived from the joint index.
std::vector<std::array<double, 3>> rest_pose(const JointLayout& layout);

}  // namespace skelact
