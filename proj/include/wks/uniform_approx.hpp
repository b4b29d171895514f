#pragma once

#include <functional>

#include "wks/lp_approx.hpp"
#include "wks/orlicz.hpp"
#include "wks/sampling.hpp"

namespace wks {

// Entropy data for the sup-norm tail machinery: eps0 bounds the natural
// norm over the index set, massiveness is the covering count N(v), weight
// is the monotone function r applied to it. When a modulus of continuity
// sigma is supplied, the covering count is majorised by T/(2 sigma^(-1)(u)) + 1
// and the integral switches to that form.
struct EntropyModel {
    double eps0 = 0.0;
    double horizon = 0.0; // T; used by the sigma-based majorant
    std::function<double(double)> massiveness;     // N(v) >= 1, non-increasing
    std::function<double(double)> weight;          // r, increasing on [1, inf)
    std::function<double(double)> weight_inverse;  // r^(-1); numeric fallback if absent
    std::function<double(double)> modulus;         // sigma (optional)
    std::function<double(double)> modulus_inverse; // sigma^(-1) (required with sigma)
};

// int_0^v r(N(u)) du, or the sigma-majorant form when a modulus is set.
// The lower endpoint may blow up; integration shrinks toward 0 until the
// tail contributes < 1e-12 of the total and throws DivergenceError if the
// refinement does not stabilise.
double entropy_integral(const EntropyModel& model, double v);

// Tail bound P{sup |X| >= u} <= 2 A(theta, u) with
// A = exp{-phi*(u(1-theta)/eps0)} r^(-1)(I_r(theta eps0)/(theta eps0)).
double uniform_tail_general(const EntropyModel& model, const OrliczFunction& phi,
                            double theta, double u);

// Companion moment bound E exp{lambda sup|X|} <= 2 Q(lambda, theta).
double uniform_moment_general(const EntropyModel& model, const OrliczFunction& phi,
                              double lambda, double theta);

enum class ThetaStrategy {
    fixed,    // caller-supplied theta
    ratio,    // theta = C_n / eps (needs eps > C_n)
    optimize, // golden-section minimisation over theta in (0,1)
};

struct ThetaChoice {
    ThetaStrategy strategy = ThetaStrategy::ratio;
    double value = 0.5; // used by ThetaStrategy::fixed

    static ThetaChoice fixed(double theta) { return {ThetaStrategy::fixed, theta}; }
    static ThetaChoice ratio() { return {ThetaStrategy::ratio, 0.0}; }
    static ThetaChoice optimize() { return {ThetaStrategy::optimize, 0.0}; }
};

// Sup-norm certificate for the truncated cardinal series. `bound` carries
// the covering-count prefactor 2 and is the value used for certification;
// `bound_no_prefactor` is the same expression without it, kept because the
// two printed forms of the specialised statement differ by exactly that
// factor. eps0_proof_exceeds_cn flags configurations where the norm-sup
// estimate sqrt(C_X c_n / n) exceeds the c_n slot in use (diagnostic only).
struct UniformCertificate {
    double eps = 0.0;
    double delta = 0.0;
    int n = 0;
    double theta = 0.0;
    double cn = 0.0; // sup-norm scale: (C_X B0/n) (linear factor at T)^2
    double bn = 0.0; // b_n(T, T) at z = z*
    double bound = 0.0;
    double bound_no_prefactor = 0.0;
    bool certified = false;
    bool theta_gate_ok = true; // false when ratio strategy hit eps <= C_n
    bool eps0_proof_exceeds_cn = false;
};

// The two constants of the sup-norm bound, both at z = z*(n).
double uniform_cn(const ProcessSpec& spec, double omega, double horizon, int n);
double uniform_bn(const ProcessSpec& spec, double omega, double horizon, int n);

// Tail bound P{sup_{[0,T]} |X - X_n| >= eps} <= bound, for a fixed theta.
// Gate: z* = omega^2 T^2/(n^2 pi^2) < 1.
UniformCertificate uniform_tail_wks(const ProcessSpec& spec,
                                    const SamplingConfig& cfg, double theta,
                                    double eps);

// Accuracy/reliability certification with the chosen theta strategy.
UniformCertificate certify_uniform(const ProcessSpec& spec,
                                   const SamplingConfig& cfg, double eps,
                                   double delta, ThetaChoice theta);

struct UniformMinTerms {
    int n = 0;
    UniformCertificate certificate;
};

// Smallest n with z*(n) < 1 and a passing certificate; doubling + bisection
// with a walk-down guard for non-monotone windows.
UniformMinTerms min_terms_uniform(const ProcessSpec& spec, double omega,
                                  double horizon, double eps, double delta,
                                  ThetaChoice theta,
                                  long long cap = 1000000000LL);

} // namespace wks
