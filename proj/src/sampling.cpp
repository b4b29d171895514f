#include "wks/sampling.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "wks/csv.hpp"
#include "wks/errors.hpp"
#include "wks/numerics.hpp"

namespace wks {

using num::pi;

namespace {

// Below this distance from a lattice zero the direct quotient is replaced
// by its series expansion.
constexpr double kSingularTol = 1e-8;

// sin(u)/u with the removable singularity expanded analytically.
double sinc_of(double u)
{
    if (std::abs(u) < kSingularTol) return 1.0 - u * u / 6.0;
    return std::sin(u) / u;
}

} // namespace

// ---------------------------------------------------------------------
// SamplingConfig
// ---------------------------------------------------------------------

void SamplingConfig::validate() const
{
    if (!(omega > band_edge) || !(band_edge > 0.0)) {
        throw InputError("sampling config: need omega > band_edge > 0");
    }
    if (!(horizon > 0.0)) throw InputError("sampling config: need horizon > 0");
    if (n < 1) throw InputError("sampling config: need n >= 1");
    if (!(z > 0.0 && z < 1.0)) throw InputError("sampling config: need z in (0,1)");
}

double SamplingConfig::z_star() const { return wks::z_star(omega, horizon, n); }

double z_star(double omega, double horizon, int n)
{
    const double r = omega * horizon / (static_cast<double>(n) * pi);
    return r * r;
}

SamplingConfig make_config(double omega, double band_edge, double horizon, int n)
{
    const double zs = z_star(omega, horizon, n);
    if (!(zs < 1.0)) {
        std::ostringstream msg;
        msg << "gate violated: z* = omega^2 T^2/(n^2 pi^2) = " << zs
            << " must be < 1 (n too small for horizon)";
        throw GateError(msg.str());
    }
    return make_config(omega, band_edge, horizon, n, zs);
}

SamplingConfig make_config(double omega, double band_edge, double horizon, int n,
                           double z)
{
    SamplingConfig cfg{omega, band_edge, horizon, n, z};
    cfg.validate();
    return cfg;
}

void require_admissible(const SamplingConfig& cfg, double t)
{
    const double needed = cfg.omega * t / (pi * std::sqrt(cfg.z));
    // 1-ulp slack: z = z*(n) makes this an exact equality
    if (static_cast<double>(cfg.n) * (1.0 + 1e-12) < needed) {
        std::ostringstream msg;
        msg << "gate violated: n >= omega*t/(pi*sqrt(z)) requires n >= " << needed
            << ", got n = " << cfg.n;
        throw GateError(msg.str());
    }
}

void require_admissible(const SamplingConfig& cfg, double t, double s)
{
    const double m = std::max(t, s);
    const double needed = cfg.omega * m / (pi * std::sqrt(cfg.z));
    if (static_cast<double>(cfg.n) * (1.0 + 1e-12) < needed) {
        std::ostringstream msg;
        msg << "gate violated: n >= omega*max(t,s)/(pi*sqrt(z)) requires n >= "
            << needed << ", got n = " << cfg.n;
        throw GateError(msg.str());
    }
}

// ---------------------------------------------------------------------
// Cardinal series
// ---------------------------------------------------------------------

double sinc_weight(double omega, double t, long k)
{
    return sinc_of(omega * t - static_cast<double>(k) * pi);
}

double SampleSet::at(long k) const
{
    if (k < -n || k > n) throw InputError("sample index outside [-n, n]");
    return values[static_cast<std::size_t>(k + n)];
}

SampleSet SampleSet::from_csv(const std::string& path)
{
    const auto rows = csv::read_rows(path, 2);
    std::map<long, double> entries;
    for (const auto& row : rows) {
        const long k = csv::to_long(row[0], path);
        if (!entries.emplace(k, csv::to_double(row[1], path)).second) {
            throw InputError(path + ": duplicate sample index " + row[0]);
        }
    }
    if (entries.empty()) throw InputError(path + ": no samples");
    const long n = std::max(std::labs(entries.begin()->first),
                            std::labs(entries.rbegin()->first));
    SampleSet set;
    set.n = static_cast<int>(n);
    set.values.resize(static_cast<std::size_t>(2 * n + 1));
    for (long k = -n; k <= n; ++k) {
        const auto it = entries.find(k);
        if (it == entries.end()) {
            throw InputError(path + ": missing sample index " + std::to_string(k));
        }
        set.values[static_cast<std::size_t>(k + n)] = it->second;
    }
    return set;
}

double truncated_sum(const SampleSet& samples, const SamplingConfig& cfg, double t)
{
    const long n = cfg.n;
    if (samples.n < n) {
        throw InputError("truncated_sum: sample window smaller than config n");
    }
    // sin(omega t - k pi) = (-1)^k sin(omega t), so one sine serves all terms.
    const double wt = cfg.omega * t;
    const double s = std::sin(wt);
    double acc = 0.0;
    for (long k = -n; k <= n; ++k) {
        const double u = wt - static_cast<double>(k) * pi;
        double w;
        if (std::abs(u) < kSingularTol) {
            w = 1.0 - u * u / 6.0;
        } else {
            w = (k % 2 == 0 ? s : -s) / u;
        }
        acc += w * samples.at(k);
    }
    return acc;
}

std::complex<double> residual_kernel(const SamplingConfig& cfg, double t,
                                     double lambda, long k)
{
    if (k < 1) throw InputError("residual_kernel: k >= 1 (terms come in +-k pairs)");
    if (std::abs(lambda) > cfg.band_edge) {
        throw InputError("residual_kernel: |lambda| exceeds the band edge");
    }
    const double wt = cfg.omega * t;
    const double kp = static_cast<double>(k) * pi;
    const double phase = kp * (1.0 - lambda / cfg.omega);

    if (std::abs(wt - kp) < kSingularTol || std::abs(wt + kp) < kSingularTol) {
        // At a lattice zero the closed form is 0/0; the two-term cardinal
        // form stays regular.
        const double arg = kp * lambda / cfg.omega;
        const std::complex<double> ep(std::cos(arg), std::sin(arg));
        return ep * sinc_of(wt - kp) + std::conj(ep) * sinc_of(wt + kp);
    }

    const double denom = (wt - kp) * (wt + kp);
    const double common = std::sin(wt) / denom;
    return {2.0 * wt * common * std::cos(phase), -2.0 * kp * common * std::sin(phase)};
}

// ---------------------------------------------------------------------
// Sine-sum inequalities
// ---------------------------------------------------------------------

SineSumCheck sine_sum_bound_check(long n, long m, double nu)
{
    if (!(n >= 0 && n < m)) throw InputError("sine_sum_bound_check: need 0 <= n < m");
    if (!(nu > 0.0 && nu <= 1.0)) throw InputError("sine_sum_bound_check: nu in (0,1]");
    double sum = 0.0;
    for (long k = n; k <= m; ++k) sum += std::sin(static_cast<double>(k) * pi * nu);
    SineSumCheck check;
    check.sum = std::abs(sum);
    check.bound = 1.0 / nu;
    check.holds = check.sum <= check.bound + 1e-12;
    return check;
}

AbelSumCheck abel_sum_bound_check(const std::vector<double>& a, long n_start,
                                  double nu)
{
    if (!(nu > 0.0 && nu <= 1.0)) throw InputError("abel_sum_bound_check: nu in (0,1]");
    if (a.size() < 2) throw InputError("abel_sum_bound_check: need a_n..a_{m+1}");
    const long m = n_start + static_cast<long>(a.size()) - 2;
    double lhs = 0.0;
    double variation = 0.0;
    for (long k = n_start; k <= m; ++k) {
        const std::size_t i = static_cast<std::size_t>(k - n_start);
        lhs += a[i] * std::sin(static_cast<double>(k) * pi * nu);
        variation += std::abs(a[i + 1] - a[i]);
    }
    AbelSumCheck check;
    check.lhs = std::abs(lhs);
    check.rhs = (variation + std::abs(a.back())) / nu;
    check.holds = check.lhs <= check.rhs + 1e-12;
    return check;
}

} // namespace wks
