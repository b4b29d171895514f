#include "wks/spectral_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

#include "wks/errors.hpp"
#include "wks/numerics.hpp"

namespace wks {

using num::pi;

double TrigPath::operator()(double t) const
{
    double v = 0.0;
    for (const auto& c : components) {
        v += c.cos_amp * std::cos(c.freq * t) + c.sin_amp * std::sin(c.freq * t);
    }
    return v;
}

// ---------------------------------------------------------------------
// Path generators
// ---------------------------------------------------------------------

namespace {

// Collapses a symmetric measure into (freq >= 0, pair mass) entries.
std::vector<std::pair<double, double>> pair_up(const SpectralMeasure& measure)
{
    if (!measure.is_symmetric()) {
        throw InputError("gaussian_path_generator: measure must be symmetric "
                         "(real-valued paths)");
    }
    std::map<double, double> mass_at;
    for (const auto& a : measure.atoms()) {
        mass_at[std::abs(a.freq)] += a.mass;
    }
    return {mass_at.begin(), mass_at.end()};
}

} // namespace

PathGenerator gaussian_path_generator(const SpectralMeasure& measure)
{
    const auto pairs = pair_up(measure);
    return [pairs](TrialRng& rng) -> PathFn {
        TrigPath path;
        path.components.reserve(pairs.size());
        for (const auto& [freq, mass] : pairs) {
            const double amp = std::sqrt(mass);
            const double xi = rng.normal();
            // the zero-frequency atom has no quadrature component
            const double eta = freq == 0.0 ? 0.0 : rng.normal();
            path.components.push_back({freq, amp * xi, amp * eta});
        }
        return path;
    };
}

PathGenerator weibull_klt_path_generator(std::vector<PathFn> basis, double alpha)
{
    if (basis.empty()) throw InputError("weibull_klt_path_generator: empty basis");
    if (!(alpha >= 2.0)) throw InputError("weibull_klt_path_generator: alpha >= 2");
    return [basis = std::move(basis), alpha](TrialRng& rng) -> PathFn {
        std::vector<double> coeff(basis.size());
        for (auto& c : coeff) c = two_sided_weibull(rng, alpha);
        return [basis, coeff = std::move(coeff)](double t) {
            double v = 0.0;
            for (std::size_t j = 0; j < basis.size(); ++j) v += coeff[j] * basis[j](t);
            return v;
        };
    };
}

bool weibull_klt_convexity_ok(double alpha)
{
    if (!(alpha >= 2.0)) return false;
    const auto g = [alpha](double x) {
        const double r = std::sqrt(x);
        return r <= 1.0 ? x / alpha : std::pow(r, alpha) / alpha;
    };
    for (int i = 1; i < 400; ++i) {
        const double x1 = 0.02 * i;
        const double x2 = x1 + 0.02 * (1 + i % 7);
        const double mid = 0.5 * (x1 + x2);
        if (g(mid) > 0.5 * (g(x1) + g(x2)) + 1e-12) return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// Path realisation
// ---------------------------------------------------------------------

namespace {

std::vector<double> lattice_samples_of(const PathFn& path, const SamplingConfig& cfg)
{
    std::vector<double> s(static_cast<std::size_t>(2 * cfg.n + 1));
    for (long k = -cfg.n; k <= cfg.n; ++k) {
        s[static_cast<std::size_t>(k + cfg.n)] = path(k * pi / cfg.omega);
    }
    return s;
}

PathSample realise(const PathFn& path, const std::vector<double>& grid,
                   const SamplingConfig& cfg)
{
    PathSample sample;
    sample.grid = grid;
    sample.values.reserve(grid.size());
    for (double t : grid) sample.values.push_back(path(t));
    sample.lattice_samples = lattice_samples_of(path, cfg);
    return sample;
}

void check_grid(const std::vector<double>& grid, double horizon)
{
    if (grid.empty()) throw InputError("empty time grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.0 || grid[i] > horizon) {
            throw InputError("grid point outside [0, T]");
        }
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw InputError("grid must be strictly increasing");
        }
    }
}

} // namespace

PathSample simulate_gaussian(const SpectralMeasure& measure,
                             const std::vector<double>& grid,
                             const SamplingConfig& cfg, std::uint64_t seed)
{
    check_grid(grid, cfg.horizon);
    TrialRng rng(seed, 0);
    return realise(gaussian_path_generator(measure)(rng), grid, cfg);
}

PathSample simulate_weibull_klt(const std::vector<PathFn>& basis, double alpha,
                                const std::vector<double>& grid,
                                const SamplingConfig& cfg, std::uint64_t seed)
{
    check_grid(grid, cfg.horizon);
    TrialRng rng(seed, 0);
    return realise(weibull_klt_path_generator(basis, alpha)(rng), grid, cfg);
}

// ---------------------------------------------------------------------
// Monte Carlo exceedance estimators
// ---------------------------------------------------------------------

int default_thread_count()
{
    if (const char* env = std::getenv("WKS_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

int min_grid_points(const SamplingConfig& cfg)
{
    return static_cast<int>(std::ceil(8.0 * cfg.omega * cfg.horizon / pi));
}

namespace {

void check_resolution(const SamplingConfig& cfg, int grid_points)
{
    if (grid_points < min_grid_points(cfg)) {
        throw InputError("grid too coarse: need at least " +
                         std::to_string(min_grid_points(cfg)) +
                         " intervals (8 per cardinal lobe)");
    }
    if (grid_points % 2 != 0) {
        throw InputError("grid_points must be even (composite Simpson)");
    }
}

// Runs fn(trial) for trial = 0..trials-1, chunked over workers. Results are
// written per index, so the outcome does not depend on the thread count.
template <class Fn>
void for_each_trial(long long trials, const Fn& fn)
{
    const int workers =
        static_cast<int>(std::min<long long>(default_thread_count(), trials));
    if (workers <= 1) {
        for (long long i = 0; i < trials; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<long long> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const long long chunk = next.fetch_add(64);
                if (chunk >= trials) return;
                const long long end = std::min(trials, chunk + 64);
                for (long long i = chunk; i < end; ++i) fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// |X(t) - X_n(t)| for one realised trial.
struct TruncationErrorFn {
    const PathFn& path;
    const SamplingConfig& cfg;
    const SampleSet& samples;

    double operator()(double t) const
    {
        return std::abs(path(t) - truncated_sum(samples, cfg, t));
    }
};

TailEstimate summarise(const std::vector<double>& metric, double eps,
                       std::uint64_t seed)
{
    TailEstimate est;
    est.trials = static_cast<long long>(metric.size());
    for (double v : metric) {
        if (v > eps) ++est.exceed_count;
    }
    est.p_hat = static_cast<double>(est.exceed_count) / est.trials;
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / est.trials);
    est.seed = seed;
    return est;
}

} // namespace

std::vector<double> mc_lp_metric(const PathGenerator& generate,
                                 const SamplingConfig& cfg, double p,
                                 long long trials, std::uint64_t seed,
                                 int grid_points)
{
    if (trials < 1) throw InputError("mc_lp_metric: need trials >= 1");
    check_resolution(cfg, grid_points);
    const double h = cfg.horizon / grid_points;

    std::vector<double> metric(static_cast<std::size_t>(trials));
    for_each_trial(trials, [&](long long trial) {
        TrialRng rng(seed, static_cast<std::uint64_t>(trial));
        const PathFn path = generate(rng);
        SampleSet samples{cfg.n, lattice_samples_of(path, cfg)};
        const TruncationErrorFn err{path, cfg, samples};
        std::vector<double> nodes(static_cast<std::size_t>(grid_points) + 1);
        for (int i = 0; i <= grid_points; ++i) {
            nodes[static_cast<std::size_t>(i)] = std::pow(err(i * h), p);
        }
        metric[static_cast<std::size_t>(trial)] = num::composite_simpson(nodes, h);
    });
    return metric;
}

std::vector<double> mc_uniform_metric(const PathGenerator& generate,
                                      const SamplingConfig& cfg,
                                      long long trials, std::uint64_t seed,
                                      int grid_points)
{
    if (trials < 1) throw InputError("mc_uniform_metric: need trials >= 1");
    check_resolution(cfg, grid_points);
    const double h = cfg.horizon / grid_points;

    std::vector<double> metric(static_cast<std::size_t>(trials));
    for_each_trial(trials, [&](long long trial) {
        TrialRng rng(seed, static_cast<std::uint64_t>(trial));
        const PathFn path = generate(rng);
        SampleSet samples{cfg.n, lattice_samples_of(path, cfg)};
        const TruncationErrorFn err{path, cfg, samples};

        double best = -1.0;
        int best_i = 0;
        for (int i = 0; i <= grid_points; ++i) {
            const double v = err(i * h);
            if (v > best) {
                best = v;
                best_i = i;
            }
        }
        // one local refinement around the grid argmax
        const double lo = std::max(0.0, (best_i - 1) * h);
        const double hi = std::min(cfg.horizon, (best_i + 1) * h);
        const double t_ref = num::golden_max(err, lo, hi, 1e-4 * h);
        metric[static_cast<std::size_t>(trial)] = std::max(best, err(t_ref));
    });
    return metric;
}

TailEstimate mc_lp_exceedance(const PathGenerator& generate,
                              const SamplingConfig& cfg, double p, double eps,
                              long long trials, std::uint64_t seed,
                              int grid_points)
{
    if (!(eps > 0.0)) throw InputError("mc_lp_exceedance: need eps > 0");
    return summarise(mc_lp_metric(generate, cfg, p, trials, seed, grid_points), eps,
                     seed);
}

TailEstimate mc_uniform_exceedance(const PathGenerator& generate,
                                   const SamplingConfig& cfg, double eps,
                                   long long trials, std::uint64_t seed,
                                   int grid_points)
{
    if (!(eps > 0.0)) throw InputError("mc_uniform_exceedance: need eps > 0");
    return summarise(mc_uniform_metric(generate, cfg, trials, seed, grid_points),
                     eps, seed);
}

SpectralMeasure demo_bandlimited_measure(double band_edge, double total_mass)
{
    if (!(band_edge > 0.0) || !(total_mass > 0.0)) {
        throw InputError("demo measure: need band_edge > 0 and total mass > 0");
    }
    const double L = band_edge;
    const double M = total_mass;
    return SpectralMeasure::symmetric_pairs({{0.13 * L, 0.30 * M},
                                             {0.40 * L, 0.30 * M},
                                             {2.0 / 3.0 * L, 0.25 * M},
                                             {0.95 * L, 0.15 * M}});
}

} // namespace wks
