#pragma once

#include <complex>
#include <string>
#include <vector>

namespace wks {

// Sampling-side parameters shared by every bound: angular rate omega,
// band edge, horizon, truncation order n and the free parameter z in (0,1).
struct SamplingConfig {
    double omega = 0.0;
    double band_edge = 0.0; // spectrum lives in [-band_edge, band_edge)
    double horizon = 0.0;   // T
    int n = 0;
    double z = 0.0;

    void validate() const;
    double z_star() const; // omega^2 T^2 / (n^2 pi^2)
};

double z_star(double omega, double horizon, int n);

// Config with z defaulted to z*; throws GateError if z* >= 1.
SamplingConfig make_config(double omega, double band_edge, double horizon, int n);
SamplingConfig make_config(double omega, double band_edge, double horizon, int n,
                           double z);

// Admissibility gates of the mean-square bounds. Both throw GateError
// naming the violated inequality.
void require_admissible(const SamplingConfig& cfg, double t);
void require_admissible(const SamplingConfig& cfg, double t, double s);

// Cardinal weight sin(omega t - k pi)/(omega t - k pi); exactly 1 at the
// lattice point t = k pi / omega.
double sinc_weight(double omega, double t, long k);

// Dense sample window k = -n..n.
struct SampleSet {
    int n = 0;
    std::vector<double> values; // size 2n+1, index k+n

    double at(long k) const;
    static SampleSet from_csv(const std::string& path); // rows "k,value"
};

// 2n+1-term cardinal series evaluated at time t (n from cfg).
double truncated_sum(const SampleSet& samples, const SamplingConfig& cfg, double t);

// Residual kernel pairing the +-k cardinal terms, k >= 1.
std::complex<double> residual_kernel(const SamplingConfig& cfg, double t,
                                     double lambda, long k);

struct SineSumCheck {
    double sum = 0.0;
    double bound = 0.0;
    bool holds = false;
};

// |sum_{k=n}^{m} sin(k pi nu)| against 1/nu, for 0 <= n < m, nu in (0,1].
SineSumCheck sine_sum_bound_check(long n, long m, double nu);

struct AbelSumCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// |sum a_k sin(k pi nu)| against (1/nu)(sum |a_{k+1}-a_k| + |a_{m+1}|).
// a holds a_n..a_{m+1}, so a.size() = m - n + 2.
AbelSumCheck abel_sum_bound_check(const std::vector<double>& a, long n_start,
                                  double nu);

} // namespace wks
