#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace wks {

enum class OrliczFamily { power, gaussian, weibull_piecewise, custom };

// An Orlicz N-function: even, convex, phi(0) = 0, sublinear at 0 and
// superlinear at infinity. Carries its density f (phi(u) = int_0^|u| f),
// Young-Fenchel conjugate phi*, and inverse on [0, inf).
//
// Built-in families use closed forms throughout; a custom family falls
// back to numeric differentiation, bracketed maximisation and bisection.
// Instances are immutable after construction and safe to share.
class OrliczFunction {
public:
    // phi(x) = |x|^alpha / alpha, 1 < alpha <= 2. Conjugate exponent
    // gamma = alpha/(alpha-1).
    static OrliczFunction make_power(double alpha);

    // phi(x) = x^2 / 2 (the power family at alpha = 2).
    static OrliczFunction make_gaussian();

    // phi(x) = x^2/alpha on |x| <= 1 and |x|^alpha/alpha beyond, alpha >= 2.
    static OrliczFunction make_weibull_piecewise(double alpha);

    // Any even monotone convex evaluator with phi(0) = 0.
    static OrliczFunction make_custom(std::string name,
                                      std::function<double(double)> evaluate);

    double value(double x) const;      // phi(x)
    double density(double v) const;    // f(v), v >= 0
    double conjugate(double x) const;  // phi*(x)
    double inverse(double y) const;    // phi^(-1)(y), y >= 0

    OrliczFamily family() const { return family_; }
    double alpha() const { return alpha_; }
    // gamma with 1/alpha + 1/gamma = 1; meaningful for power/weibull.
    double conjugate_exponent() const;
    const std::string& name() const { return name_; }

    // Config grammar: "power:alpha=1.5", "gaussian", "weibull:alpha=4".
    std::string to_config() const;
    static OrliczFunction from_config(std::string_view text);

private:
    OrliczFunction() = default;

    OrliczFamily family_ = OrliczFamily::gaussian;
    double alpha_ = 2.0;
    std::string name_;
    std::function<double(double)> custom_;
};

struct ConditionQReport {
    double limit_estimate = 0.0; // may be +infinity
    bool satisfied = false;
    bool inconclusive = false; // oscillating estimates, distinct from violated
};

// Estimates lim_{x->0} phi(x)/x^2 on the grid x_k = 2^-k, k = 1..40.
ConditionQReport check_condition_q(const OrliczFunction& phi);

// sup_y (x*y - phi(y)) by doubling bracket + golden section. Throws
// NumericError if no bracket is found.
double numeric_conjugate(const std::function<double(double)>& phi, double x);

} // namespace wks
