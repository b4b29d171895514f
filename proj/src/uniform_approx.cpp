#include "wks/uniform_approx.hpp"

#include <cmath>
#include <limits>

#include "wks/detail/min_search.hpp"
#include "wks/errors.hpp"
#include "wks/ms_bounds.hpp"
#include "wks/numerics.hpp"

namespace wks {

using num::pi;

// ---------------------------------------------------------------------
// Entropy integral
// ---------------------------------------------------------------------

double entropy_integral(const EntropyModel& model, double v)
{
    if (!(v > 0.0)) throw InputError("entropy_integral: need v > 0");

    std::function<double(double)> integrand;
    if (model.modulus) {
        if (!model.modulus_inverse) {
            throw InputError("entropy_integral: modulus given without its inverse");
        }
        integrand = [&](double u) {
            return model.weight(model.horizon / (2.0 * model.modulus_inverse(u)) + 1.0);
        };
    } else {
        if (!model.massiveness) {
            throw InputError("entropy_integral: no massiveness and no modulus");
        }
        integrand = [&](double u) { return model.weight(model.massiveness(u)); };
    }

    // The integrand may blow up at 0: accumulate dyadic slices [v/2^{j+1}, v/2^j]
    // until the latest slice is negligible against the running total.
    constexpr int max_levels = 200;
    double total = 0.0;
    double upper = v;
    for (int level = 0; level < max_levels; ++level) {
        const double lower = 0.5 * upper;
        const double crude = (upper - lower) * integrand(0.5 * (lower + upper));
        const double tol = 1e-13 * std::max({total, crude, 1e-300});
        const double slice = num::adaptive_simpson(integrand, lower, upper, tol, 48);
        if (!std::isfinite(slice)) {
            throw DivergenceError("entropy_integral: non-finite slice");
        }
        total += slice;
        if (slice < 1e-12 * total && level > 0) return total;
        upper = lower;
    }
    throw DivergenceError("entropy_integral: refinement toward 0 does not stabilise");
}

// ---------------------------------------------------------------------
// General entropy tail/moment bounds
// ---------------------------------------------------------------------

namespace {

double invert_weight(const EntropyModel& model, double y)
{
    if (model.weight_inverse) return model.weight_inverse(y);
    // numeric inverse of the increasing weight on [1, inf)
    if (y <= model.weight(1.0)) return 1.0;
    double hi = 2.0;
    int guard = 0;
    while (model.weight(hi) < y) {
        hi *= 2.0;
        if (++guard > 2000) throw NumericError("weight inverse: no upper bracket");
    }
    return num::bisect_increasing(model.weight, y, 1.0, hi, hi * 1e-14);
}

double covering_factor(const EntropyModel& model, double theta)
{
    const double te = theta * model.eps0;
    return invert_weight(model, entropy_integral(model, te) / te);
}

} // namespace

double uniform_tail_general(const EntropyModel& model, const OrliczFunction& phi,
                            double theta, double u)
{
    if (!(theta > 0.0 && theta < 1.0)) throw InputError("uniform_tail_general: theta in (0,1)");
    if (!(u >= 0.0)) throw InputError("uniform_tail_general: need u >= 0");
    if (!(model.eps0 > 0.0)) throw InputError("uniform_tail_general: need eps0 > 0");
    const double expo = std::exp(-phi.conjugate(u * (1.0 - theta) / model.eps0));
    return 2.0 * expo * covering_factor(model, theta);
}

double uniform_moment_general(const EntropyModel& model, const OrliczFunction& phi,
                              double lambda, double theta)
{
    if (!(theta > 0.0 && theta < 1.0)) throw InputError("uniform_moment_general: theta in (0,1)");
    if (!(lambda > 0.0)) throw InputError("uniform_moment_general: need lambda > 0");
    const double expo = std::exp(phi.value(lambda * model.eps0 / (1.0 - theta)));
    return 2.0 * expo * covering_factor(model, theta);
}

// ---------------------------------------------------------------------
// Cardinal-series sup-norm bound
// ---------------------------------------------------------------------

double uniform_cn(const ProcessSpec& spec, double omega, double horizon, int n)
{
    const SamplingConfig cfg = make_config(omega, spec.band_edge, horizon, n);
    const double lin = cn_linear_factor(cfg, horizon);
    return spec.C_X * spec.B0 / n * lin * lin;
}

double uniform_bn(const ProcessSpec& spec, double omega, double horizon, int n)
{
    const SamplingConfig cfg = make_config(omega, spec.band_edge, horizon, n);
    return bn_bound(cfg, spec.B0, horizon, horizon).bn;
}

UniformCertificate uniform_tail_wks(const ProcessSpec& spec,
                                    const SamplingConfig& cfg, double theta,
                                    double eps)
{
    if (!(theta > 0.0 && theta < 1.0)) throw InputError("uniform_tail_wks: theta in (0,1)");
    if (!(eps > 0.0)) throw InputError("uniform_tail_wks: need eps > 0");

    // The sup-norm statement pins z = z*; cfg.z is not consulted here.
    UniformCertificate cert;
    cert.eps = eps;
    cert.delta = std::numeric_limits<double>::quiet_NaN();
    cert.n = cfg.n;
    cert.theta = theta;
    cert.cn = uniform_cn(spec, cfg.omega, cfg.horizon, cfg.n); // gates z* < 1
    cert.bn = uniform_bn(spec, cfg.omega, cfg.horizon, cfg.n);

    const double core = std::exp(-spec.phi.conjugate(eps * (1.0 - theta) / cert.cn));
    const double factor = std::exp(1.0) * cfg.horizon * spec.C_X * std::sqrt(cert.bn) /
                              (2.0 * cfg.n * theta * cert.cn) +
                          1.0;
    cert.bound_no_prefactor = core * factor;
    cert.bound = 2.0 * cert.bound_no_prefactor;
    cert.eps0_proof_exceeds_cn = std::sqrt(spec.C_X * cert.cn / cfg.n) > cert.cn;
    return cert;
}

UniformCertificate certify_uniform(const ProcessSpec& spec,
                                   const SamplingConfig& cfg, double eps,
                                   double delta, ThetaChoice theta)
{
    if (!(delta > 0.0 && delta < 1.0)) throw InputError("certify_uniform: delta in (0,1)");

    UniformCertificate cert;
    switch (theta.strategy) {
    case ThetaStrategy::fixed:
        cert = uniform_tail_wks(spec, cfg, theta.value, eps);
        break;
    case ThetaStrategy::ratio: {
        const double cn = uniform_cn(spec, cfg.omega, cfg.horizon, cfg.n);
        if (!(eps > cn)) {
            cert.eps = eps;
            cert.n = cfg.n;
            cert.theta = cn / eps;
            cert.cn = cn;
            cert.bn = uniform_bn(spec, cfg.omega, cfg.horizon, cfg.n);
            cert.bound = std::numeric_limits<double>::quiet_NaN();
            cert.bound_no_prefactor = cert.bound;
            cert.theta_gate_ok = false;
            cert.delta = delta;
            return cert;
        }
        cert = uniform_tail_wks(spec, cfg, cn / eps, eps);
        break;
    }
    case ThetaStrategy::optimize: {
        // coarse pre-scan guards the golden section against local minima
        constexpr int scan_points = 64;
        constexpr double lo = 1e-6;
        const double hi = 1.0 - 1e-6;
        const auto bound_at = [&](double th) {
            return uniform_tail_wks(spec, cfg, th, eps).bound;
        };
        int best = 0;
        double best_val = std::numeric_limits<double>::infinity();
        for (int i = 0; i < scan_points; ++i) {
            const double th = lo + (hi - lo) * i / (scan_points - 1);
            const double val = bound_at(th);
            if (val < best_val) {
                best_val = val;
                best = i;
            }
        }
        const double a = lo + (hi - lo) * std::max(0, best - 1) / (scan_points - 1);
        const double b = lo + (hi - lo) * std::min(scan_points - 1, best + 1) /
                                  (scan_points - 1);
        const double th = num::golden_min(bound_at, a, b, 1e-6);
        cert = uniform_tail_wks(spec, cfg, th, eps);
        break;
    }
    }
    cert.delta = delta;
    cert.certified = cert.bound <= delta;
    return cert;
}

UniformMinTerms min_terms_uniform(const ProcessSpec& spec, double omega,
                                  double horizon, double eps, double delta,
                                  ThetaChoice theta, long long cap)
{
    if (!(omega > spec.band_edge)) {
        throw InputError("min_terms_uniform: need omega > band_edge");
    }
    const auto certified_at = [&](long long n) {
        const SamplingConfig cfg =
            make_config(omega, spec.band_edge, horizon, static_cast<int>(n));
        return certify_uniform(spec, cfg, eps, delta, theta).certified;
    };
    UniformMinTerms result;
    result.n = static_cast<int>(detail::min_true_n(omega, horizon, cap, certified_at));
    const SamplingConfig cfg = make_config(omega, spec.band_edge, horizon, result.n);
    result.certificate = certify_uniform(spec, cfg, eps, delta, theta);
    return result;
}

} // namespace wks
