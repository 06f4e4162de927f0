#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace sphmc {

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t hash_combine64(std::uint64_t h, std::uint64_t v) noexcept {
    return mix64(h + 0x9E3779B97F4A7C15ULL + v);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Per-repetition seed for a study cell. Injectivity over the cross product
/// (method, n, rep) is not guaranteed in theory, only checked by tests over
/// the grids we actually run.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view method_tag,
                                 std::uint64_t n, std::uint64_t rep) noexcept {
    std::uint64_t h = hash_combine64(master, fnv1a64(method_tag));
    h = hash_combine64(h, n);
    h = hash_combine64(h, rep);
    return h;
}

/// Seeded random stream. Wraps std::mt19937_64 and generates all variates
/// from explicit formulas so that a seed fully determines the output bytes.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform01_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller; second value of each pair is cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01_pos();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    /// Standard complex normal with E|z|^2 = 1 (re, im ~ N(0, 1/2) independent).
    std::complex<double> complex_normal() {
        const double u1 = uniform01_pos();
        const double u2 = uniform01();
        const double r = std::sqrt(-std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace sphmc
