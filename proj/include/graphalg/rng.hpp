#pragma once

#include <cstdint>

#include "graphalg/cmatrix.hpp"

namespace graphalg {

/// Deterministic splitmix64 generator. Used instead of <random> engines so
/// that seeded sweeps and reports are byte-identical across standard
/// libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform index in [0, n); n must be positive.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(next_u64() % n);
    }

    /// Complex with both parts uniform in [-1, 1].
    cplx box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

private:
    std::uint64_t s_;
};

}  // namespace graphalg
