#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace skelact {

// Counter-based pseudo-random generator: a splitmix64 walk over a
// seed-derived state. The same seed yields the same draw sequence on every
// platform, and derive() produces independent streams keyed by e.g.
// (sample index, epoch) so parallel batch assembly order cannot matter.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(mix(seed ^ kGolden)) {}

    static Rng derive(uint64_t base, std::initializer_list<uint64_t> keys) {
        uint64_t h = mix(base ^ kGolden);
        for (uint64_t k : keys) {
            h = mix(h ^ mix(k + kGolden));
        }
        Rng r(0);
        r.state_ = h;
        r.have_cached_ = false;
        return r;
    }

    uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n), n > 0.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    // N(0, sigma^2) via Box-Muller; the sine partner is cached.
    double normal(double sigma = 1.0) {
        if (have_cached_) {
            have_cached_ = false;
            return cached_ * sigma;
        }
        double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * kPi * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a) * sigma;
    }

  private:
    static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;
    static constexpr double kPi = 3.14159265358979323846;

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

// FNV-1a, used to derive per-parameter init streams from names.
inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace skelact
