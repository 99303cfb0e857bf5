#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace cleansched {

// Deterministic RNG with explicitly pinned output distributions.
// std::mt19937_64 is fully specified by the standard, but the standard
// distributions are not; the helpers below are, so results reproduce
// bit-for-bit across compilers and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix(seed)) {}

    // Derive an independent stream, e.g. one per fold / config / resample.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed);
        r.state_ ^= splitmix(0x9e3779b97f4a7c15ULL + stream);
        r.next();
        return r;
    }

    std::uint64_t next() {
        // xorshift64* sequence seeded via splitmix64
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dULL;
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [lo, hi] inclusive
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        // modulo bias is < 2^-50 for any span we use; acceptable and deterministic
        return lo + static_cast<std::int64_t>(next() % span);
    }

    double normal(double mean = 0.0, double sd = 1.0) {
        // Box-Muller, one value per call
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sd * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    template <typename T> void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
};

} // namespace cleansched
