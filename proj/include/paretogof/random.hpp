#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace paretogof {

// splitmix64 finalizer; used to turn (seed, index, ...) tuples into
// well-separated engine seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// A random stream owned by exactly one replication (or one caller).
///
/// Streams are derived from a master seed and a path of indices, so the
/// stream for replication r of cell (i, j) is the same no matter which
/// thread runs it or in what order.
class RandomStream {
public:
    using engine_type = std::mt19937_64;

    explicit RandomStream(std::uint64_t seed) : engine_(mix64(seed)) {}

    static RandomStream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::uint64_t h = mix64(seed);
        for (std::uint64_t p : path) h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
        return RandomStream(h);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        ++draws_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1).
    double uniform_open() {
        double u;
        do u = uniform();
        while (u == 0.0);
        return u;
    }

    double exponential() { return -std::log1p(-uniform()); }

    double normal() {
        ++draws_;
        return normal_(engine_);
    }

    double gamma(double shape) {
        ++draws_;
        return std::gamma_distribution<double>(shape, 1.0)(engine_);
    }

    // Number of variates requested so far; lets tests observe consumption.
    std::uint64_t draws() const noexcept { return draws_; }

private:
    engine_type engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uint64_t draws_ = 0;
};

}  // namespace paretogof
