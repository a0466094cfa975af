#pragma once

#include <cstdint>

namespace lcstat {

// Counter-based generator: every variate is a pure function of (key, counter),
// so sample streams are reproducible independently of thread scheduling.
// Splittable: derive one key per (seed, worker) pair.
struct CounterRng {
    std::uint64_t key;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static CounterRng from_seed(std::uint64_t seed, std::uint64_t worker = 0) {
        return {mix(mix(seed) ^ (worker * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull))};
    }

    std::uint64_t bits(std::uint64_t counter) const { return mix(key + counter * 0x9E3779B97F4A7C15ull); }

    // Uniform double in [0, 1).
    double u01(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform double in (-1, 1).
    double sym(std::uint64_t counter) const { return 2.0 * u01(counter) - 1.0; }
};

}  // namespace lcstat
