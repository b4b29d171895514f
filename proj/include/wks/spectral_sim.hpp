#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wks/ms_bounds.hpp"
#include "wks/rng.hpp"
#include "wks/sampling.hpp"

namespace wks {

// A realised sample path: finite trigonometric sum, exact at any t.
struct TrigPath {
    struct Component {
        double freq = 0.0;
        double cos_amp = 0.0;
        double sin_amp = 0.0;
    };
    std::vector<Component> components;

    double operator()(double t) const;
};

using PathFn = std::function<double(double)>;
using PathGenerator = std::function<PathFn(TrialRng&)>;

// One path realised on a grid plus its lattice samples k pi/omega, |k| <= n.
struct PathSample {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> lattice_samples; // size 2n+1
};

// Empirical exceedance frequency with its binomial standard error.
struct TailEstimate {
    long long exceed_count = 0;
    long long trials = 0;
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t seed = 0;
};

// Stationary Gaussian paths with the exact discrete spectrum of `measure`:
// per symmetric pair, sqrt(pair mass) (xi cos(lambda t) + eta sin(lambda t))
// with independent standard normals. Throws InputError for asymmetric
// measures (real paths need symmetry).
PathGenerator gaussian_path_generator(const SpectralMeasure& measure);

// Expansion over fixed basis functions with i.i.d. two-sided Weibull(alpha)
// coefficients.
PathGenerator weibull_klt_path_generator(std::vector<PathFn> basis, double alpha);

// Midpoint-convexity probe of phi(sqrt(x)) for the piecewise Weibull family;
// certification with a determinative constant is refused when it fails.
bool weibull_klt_convexity_ok(double alpha);

PathSample simulate_gaussian(const SpectralMeasure& measure,
                             const std::vector<double>& grid,
                             const SamplingConfig& cfg, std::uint64_t seed);

PathSample simulate_weibull_klt(const std::vector<PathFn>& basis, double alpha,
                                const std::vector<double>& grid,
                                const SamplingConfig& cfg, std::uint64_t seed);

// Smallest even grid size admitted for MC integration/sup scans:
// at least eight nodes per cardinal lobe pi/omega.
int min_grid_points(const SamplingConfig& cfg);

// Empirical P{ int_0^T |X - X_n|^p dt > eps } over seeded trials.
// Composite Simpson on a uniform grid of grid_points intervals.
TailEstimate mc_lp_exceedance(const PathGenerator& generate,
                              const SamplingConfig& cfg, double p, double eps,
                              long long trials, std::uint64_t seed,
                              int grid_points = 256);

// Empirical P{ sup_{[0,T]} |X - X_n| > eps }: grid maximum plus one local
// golden-section refinement around the argmax.
TailEstimate mc_uniform_exceedance(const PathGenerator& generate,
                                   const SamplingConfig& cfg, double eps,
                                   long long trials, std::uint64_t seed,
                                   int grid_points = 512);

// Per-trial metric values (index = trial); the building block behind both
// exceedance estimators, exposed for dumps and self-convergence checks.
std::vector<double> mc_lp_metric(const PathGenerator& generate,
                                 const SamplingConfig& cfg, double p,
                                 long long trials, std::uint64_t seed,
                                 int grid_points);
std::vector<double> mc_uniform_metric(const PathGenerator& generate,
                                      const SamplingConfig& cfg,
                                      long long trials, std::uint64_t seed,
                                      int grid_points);

// Deterministic bandlimited demo measure: four symmetric pairs inside
// (-band_edge, band_edge) with the given total mass.
SpectralMeasure demo_bandlimited_measure(double band_edge, double total_mass);

// Default worker count for trial sweeps; reads WKS_THREADS.
int default_thread_count();

} // namespace wks
