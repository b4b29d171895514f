#pragma once

#include "wks/orlicz.hpp"
#include "wks/sampling.hpp"

namespace wks {

// A stationary bandlimited process model: variance B(0), band edge, the
// Orlicz function of its sub-Gaussian family and the determinative
// constant C_X. The gaussian flag pins phi = x^2/2 and C_X = 1.
struct ProcessSpec {
    double B0 = 1.0;
    double band_edge = 0.0;
    double C_X = 1.0;
    OrliczFunction phi = OrliczFunction::make_gaussian();
    bool gaussian = true;

    static ProcessSpec make_gaussian(double B0, double band_edge);
    static ProcessSpec make(double B0, double band_edge, double C_X,
                            OrliczFunction phi);
    void validate() const;
};

// Outcome of an L_p accuracy/reliability check for the truncated cardinal
// series. threshold_ok records the validity gate of the tail inequality;
// when it fails the tail bound carries no claim (NaN).
struct LpCertificate {
    double p = 2.0;
    double horizon = 0.0;
    double eps = 0.0;
    double delta = 0.0;
    int n = 0;
    double z = 0.0;
    double s_np = 0.0;
    bool threshold_ok = false;
    double tail_bound = 0.0; // 2 exp{-phi*((eps/S_np)^(1/p))}
    bool certified = false;
};

// S_{n,p} = (C_X/n)^p int_0^T C_n^{p/2}(t) dt. Exact antiderivative for
// even integer p, adaptive Simpson otherwise. Gate: n >= omega T/(pi sqrt z).
double s_np(const ProcessSpec& spec, const SamplingConfig& cfg, double p);

// Tail bound P{ int_0^T |X - X_n|^p > eps } <= 2 exp{-phi*((eps/S_np)^(1/p))},
// valid when eps > S_np (f(p (S_np/eps)^(1/p)))^p with f the density of phi.
LpCertificate tail_bound_lp(const ProcessSpec& spec, const SamplingConfig& cfg,
                            double p, double eps);

// Accuracy eps with reliability 1-delta: certified when the validity gate
// holds and exp{-phi*((eps/S_np)^(1/p))} <= delta/2.
LpCertificate certify_lp(const ProcessSpec& spec, const SamplingConfig& cfg,
                         double p, double eps, double delta);

// Gaussian closed-form certificate: S_hat < eps / max(p^(p/2), (2 ln(2/delta))^(p/2)).
bool gaussian_lp_certified(double s_hat, double p, double eps, double delta);

struct MinTermsResult {
    int n = 0;
    double z_used = 0.0;
    LpCertificate certificate;
};

// Smallest n with z = z*(n) < 1 whose certificate passes; doubling then
// bisection over the (empirically monotone) certified predicate, with a
// final walk-down guard. Throws UnsatisfiableError past the cap.
MinTermsResult min_terms_lp(const ProcessSpec& spec, double omega, double horizon,
                            double p, double eps, double delta,
                            long long cap = 1000000000LL);

// Same search on the coarser endpoint majorant
// B0^{p/2} T (A1 T + A0)^p / n^p with A0 = 4(z+2)/(pi (1-z)^2 (1-band/omega)),
// z = z*(n). Gaussian closed-form route; kept separate because it is looser.
MinTermsResult min_terms_lp_relaxed(const ProcessSpec& spec, double omega,
                                    double horizon, double p, double eps,
                                    double delta, long long cap = 1000000000LL);

} // namespace wks
