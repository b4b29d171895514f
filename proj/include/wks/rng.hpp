#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wks {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seedable random source with one independent stream per trial index.
// Stream keys are derived by splitmix64 mixing, so trials can run in any
// order (or concurrently) and still reproduce bit-identically.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream)
        : eng_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x6C62272E07BB0142ULL)))
    {
    }

    std::uint64_t raw() { return eng_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1].
    double uniform_open01() { return 1.0 - uniform01(); }

    // Standard normal via the Marsaglia polar method.
    double normal()
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Symmetric variable with P{xi >= x} = P{xi <= -x} = exp(-x^alpha/alpha)/2,
// sampled by inverse CDF of the magnitude.
inline double two_sided_weibull(TrialRng& rng, double alpha)
{
    const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    const double u = rng.uniform_open01();
    return sign * std::pow(alpha * std::log(1.0 / u), 1.0 / alpha);
}

} // namespace wks
