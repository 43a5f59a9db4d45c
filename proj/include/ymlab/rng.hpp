#pragma once

#include <complex>
#include <cmath>
#include <cstdint>

namespace ymlab {

// Self-contained splitmix64 generator. Used everywhere randomness is needed so
// that reports are reproducible across standard libraries and across runs.
// Sub-streams derived with derive() are independent for distinct keys, which
// gives each probe sample (and each lattice mode) its own deterministic stream
// regardless of evaluation order or worker count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal, Box-Muller
    double normal() {
        double u1 = uniform();
        while (u1 <= 0x1.0p-60) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::complex<double> normal_complex() {
        double u1 = uniform();
        while (u1 <= 0x1.0p-60) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double phi = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        return z ^ (z >> 31);
    }

    // child stream keyed by (seed-so-far, key)
    Rng derive(std::uint64_t key) const { return Rng(mix(state_, key)); }

  private:
    std::uint64_t state_;
};

}  // namespace ymlab
