// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <complex>
#include <cstdint>
#include <utility>

namespace irsim::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// splitmix64 finalizer: bijective avalanche mix of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based random stream. A stream is identified by (seed, stream_id)
/// and produces value(i) = mix64(base + (i+1)*golden), the splitmix64 sequence
/// evaluated at an arbitrary counter. Draws are a pure function of
/// (seed, stream_id, counter), so parallel consumers that partition the
/// counter space reproduce serial output exactly.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream_id)
        : base_(mix64(seed + kGolden) ^
                mix64(stream_id * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull)) {}

    std::uint64_t bits(std::uint64_t counter) const {
        return mix64(base_ + (counter + 1) * kGolden);
    }

    /// Uniform on the open interval (0,1); never returns 0 or 1 exactly.
    double uniform01(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Box-Muller pair of independent standard normals, consuming counters
    /// counter and counter+1 of the underlying bit stream.
    std::pair<double, double> normal_pair(std::uint64_t counter) const;

    /// Circularly symmetric unit-variance complex normal CN(0,1): real and
    /// imaginary parts are independent N(0, 1/2). Consumes bit-stream
    /// counters 2*index and 2*index+1, so distinct indices never collide.
    std::complex<double> complex_normal(std::uint64_t index) const;

private:
    std::uint64_t base_;
};

/// Sequential engine over a counter stream, for consumers that want
/// conventional draw-after-draw semantics (optimizers). Satisfies enough of
/// UniformRandomBitGenerator to be used directly.
class Engine {
public:
    using result_type = std::uint64_t;

    explicit Engine(std::uint64_t seed, std::uint64_t stream_id = 0)
        : stream_(seed, stream_id) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }

    result_type operator()() { return stream_.bits(counter_++); }

    double uniform01() { return stream_.uniform01(counter_++); }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n)) % n;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        auto [a, b] = stream_.normal_pair(counter_);
        counter_ += 2;
        spare_ = b;
        have_spare_ = true;
        return a;
    }

private:
    Stream stream_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace irsim::rng
