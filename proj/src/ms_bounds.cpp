#include "wks/ms_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "wks/csv.hpp"
#include "wks/errors.hpp"
#include "wks/numerics.hpp"

namespace wks {

using num::pi;

// ---------------------------------------------------------------------
// SpectralMeasure
// ---------------------------------------------------------------------

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms))
{
    for (const auto& a : atoms_) {
        if (a.mass < 0.0) throw InputError("spectral measure: negative mass");
        total_mass_ += a.mass;
    }
}

SpectralMeasure SpectralMeasure::symmetric_pairs(
    const std::vector<std::pair<double, double>>& freq_mass)
{
    std::vector<Atom> atoms;
    atoms.reserve(2 * freq_mass.size());
    for (const auto& [freq, mass] : freq_mass) {
        if (freq < 0.0) throw InputError("symmetric_pairs: pair frequencies are >= 0");
        if (freq == 0.0) {
            atoms.push_back({0.0, mass});
        } else {
            atoms.push_back({freq, 0.5 * mass});
            atoms.push_back({-freq, 0.5 * mass});
        }
    }
    return SpectralMeasure(std::move(atoms));
}

SpectralMeasure SpectralMeasure::from_csv(const std::string& path)
{
    const auto rows = csv::read_rows(path, 2);
    std::vector<Atom> atoms;
    atoms.reserve(rows.size());
    for (const auto& row : rows) {
        atoms.push_back({csv::to_double(row[0], path), csv::to_double(row[1], path)});
    }
    return SpectralMeasure(std::move(atoms));
}

double SpectralMeasure::covariance(double tau) const
{
    double b = 0.0;
    for (const auto& a : atoms_) b += a.mass * std::cos(tau * a.freq);
    return b;
}

bool SpectralMeasure::is_symmetric(double tol) const
{
    // Net signed mass at each frequency must mirror across zero.
    for (const auto& a : atoms_) {
        double here = 0.0;
        double mirror = 0.0;
        for (const auto& b : atoms_) {
            if (std::abs(b.freq - a.freq) <= tol) here += b.mass;
            if (std::abs(b.freq + a.freq) <= tol) mirror += b.mass;
        }
        if (std::abs(here - mirror) > tol * std::max(1.0, total_mass_)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// Theorem-style closed-form bounds
// ---------------------------------------------------------------------

double cn_linear_factor(const SamplingConfig& cfg, double t)
{
    const double z = cfg.z;
    const double n = cfg.n;
    const double band_ratio = 1.0 - cfg.band_edge / cfg.omega;
    return 4.0 * cfg.omega * t / (pi * pi * (1.0 - z)) +
           4.0 * (z + 1.0 + 1.0 / n) / (pi * (1.0 - z) * (1.0 - z) * band_ratio);
}

MsBoundReport cn_bound(const SamplingConfig& cfg, double B0, double t)
{
    cfg.validate();
    if (!(B0 > 0.0)) throw InputError("cn_bound: need B(0) > 0");
    require_admissible(cfg, t);
    const double s = cn_linear_factor(cfg, t);
    MsBoundReport report;
    report.cn = B0 * s * s;
    report.bound_value = report.cn / (static_cast<double>(cfg.n) * cfg.n);
    return report;
}

MsBoundReport bn_bound(const SamplingConfig& cfg, double B0, double t, double s)
{
    cfg.validate();
    if (!(B0 > 0.0)) throw InputError("bn_bound: need B(0) > 0");
    require_admissible(cfg, t, s);

    const double z = cfg.z;
    const double n = cfg.n;
    const double omega = cfg.omega;
    const double band_ratio = 1.0 - cfg.band_edge / omega;

    const double wn = 4.0 * omega / (pi * pi * (1.0 - z)) *
                      (omega * s + 1.0 +
                       omega * omega * (s + t) * s / (pi * pi * n * n * (1.0 - z)));
    const double qn = 2.0 * omega / (pi * (1.0 - z) * (1.0 - z)) *
                      (z + 1.0 + 1.0 / n + 2.0 * omega * (s + t) / (n * pi * pi));

    MsBoundReport report;
    report.wn = wn;
    report.qn = qn;
    const double sum = wn + qn / band_ratio;
    report.bn = B0 * sum * sum;
    const double dt = (t - s) / n;
    report.bound_value = dt * dt * report.bn;
    return report;
}

double belyaev_bound(const SamplingConfig& cfg, double B0, double t)
{
    cfg.validate();
    const double band_ratio = 1.0 - cfg.band_edge / cfg.omega;
    const double lin = 2.0 * pi + t * cfg.omega;
    const double n = cfg.n;
    return 16.0 * cfg.omega * cfg.omega * lin * lin * B0 /
           (pi * pi * pi * pi * n * n * band_ratio * band_ratio);
}

// ---------------------------------------------------------------------
// Exact oracle for discrete spectra
// ---------------------------------------------------------------------

namespace {

// e^{i t lambda} - sum_{|k|<=n} e^{i k pi lambda / omega} sinc_weight(omega,t,k)
std::complex<double> truncation_symbol(const SamplingConfig& cfg, double t,
                                       double lambda)
{
    const long n = cfg.n;
    const double wt = cfg.omega * t;
    const double s = std::sin(wt);
    const double step = pi * lambda / cfg.omega;
    std::complex<double> acc(std::cos(t * lambda), std::sin(t * lambda));
    for (long k = -n; k <= n; ++k) {
        const double u = wt - static_cast<double>(k) * pi;
        double w;
        if (std::abs(u) < 1e-8) {
            w = 1.0 - u * u / 6.0;
        } else {
            w = (k % 2 == 0 ? s : -s) / u;
        }
        const double arg = static_cast<double>(k) * step;
        acc -= std::complex<double>(w * std::cos(arg), w * std::sin(arg));
    }
    return acc;
}

void check_atoms_in_band(const SpectralMeasure& measure, const SamplingConfig& cfg)
{
    for (const auto& a : measure.atoms()) {
        if (a.freq < -cfg.band_edge || a.freq >= cfg.band_edge) {
            throw InputError("spectral atom outside [-band_edge, band_edge)");
        }
    }
}

} // namespace

double exact_ms_error(const SpectralMeasure& measure, const SamplingConfig& cfg,
                      double t, int k_max)
{
    cfg.validate();
    check_atoms_in_band(measure, cfg);
    if (k_max >= 0 && k_max < cfg.n) {
        throw InputError("exact_ms_error: k_max must be >= n when given");
    }
    double err = 0.0;
    for (const auto& a : measure.atoms()) {
        err += a.mass * std::norm(truncation_symbol(cfg, t, a.freq));
    }
    return err;
}

double exact_increment_ms(const SpectralMeasure& measure, const SamplingConfig& cfg,
                          double t, double s)
{
    cfg.validate();
    check_atoms_in_band(measure, cfg);
    double err = 0.0;
    for (const auto& a : measure.atoms()) {
        const auto diff =
            truncation_symbol(cfg, t, a.freq) - truncation_symbol(cfg, s, a.freq);
        err += a.mass * std::norm(diff);
    }
    return err;
}

} // namespace wks
