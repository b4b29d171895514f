#pragma once

#include <string>
#include <vector>

#include "wks/sampling.hpp"

namespace wks {

// Discrete spectral measure: atoms (frequency, mass) with total mass B(0).
// Keeping the measure atomic makes the mean-square truncation error exactly
// computable, so "bound dominates truth" becomes a machine-checkable
// inequality.
class SpectralMeasure {
public:
    struct Atom {
        double freq = 0.0;
        double mass = 0.0;
    };

    explicit SpectralMeasure(std::vector<Atom> atoms);

    // Splits each (freq > 0, mass) pair into atoms at +-freq with mass/2;
    // a pair at freq = 0 stays a single atom.
    static SpectralMeasure symmetric_pairs(
        const std::vector<std::pair<double, double>>& freq_mass);

    static SpectralMeasure from_csv(const std::string& path); // rows "lambda,mass"

    const std::vector<Atom>& atoms() const { return atoms_; }
    double total_mass() const { return total_mass_; } // B(0)

    // B(tau) = sum mass_j cos(tau lambda_j); exact for symmetric measures.
    double covariance(double tau) const;

    bool is_symmetric(double tol = 1e-12) const;

private:
    std::vector<Atom> atoms_;
    double total_mass_ = 0.0;
};

// One computed mean-square bound with its intermediate constants. Reports
// are only produced for admissible inputs; inadmissible calls throw
// GateError instead.
struct MsBoundReport {
    double bound_value = 0.0; // C_n(t)/n^2, or ((t-s)/n)^2 b_n(t,s)
    double cn = 0.0;          // C_n(t) (point bound only)
    double bn = 0.0;          // b_n(t,s) (increment bound only)
    double wn = 0.0;
    double qn = 0.0;
    bool admissible = true;
};

// Linear-in-t factor whose square (times B(0)) is C_n(t):
// 4 omega t / (pi^2 (1-z)) + 4(z+1+1/n) / (pi (1-z)^2 (1-band/omega)).
double cn_linear_factor(const SamplingConfig& cfg, double t);

// Mean-square truncation bound E|X(t)-X_n(t)|^2 <= C_n(t)/n^2.
// Gate: n >= omega t / (pi sqrt(z)).
MsBoundReport cn_bound(const SamplingConfig& cfg, double B0, double t);

// Increment bound E(Y_n(t)-Y_n(s))^2 <= ((t-s)/n)^2 b_n(t,s).
// Gate: n >= omega max(t,s) / (pi sqrt(z)).
MsBoundReport bn_bound(const SamplingConfig& cfg, double B0, double t, double s);

// Classical bound 16 omega^2 (2 pi + t omega)^2 B(0) / (pi^4 n^2 (1-band/omega)^2).
double belyaev_bound(const SamplingConfig& cfg, double B0, double t);

// Exact E|X(t)-X_n(t)|^2 for a discrete measure; the ground-truth oracle.
// k_max is accepted for interface compatibility and only validated
// (the direct form needs nothing beyond |k| <= n).
double exact_ms_error(const SpectralMeasure& measure, const SamplingConfig& cfg,
                      double t, int k_max = -1);

// Exact E(Y_n(t)-Y_n(s))^2 for a discrete measure.
double exact_increment_ms(const SpectralMeasure& measure, const SamplingConfig& cfg,
                          double t, double s);

} // namespace wks
