#include "wks/orlicz.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "wks/errors.hpp"
#include "wks/numerics.hpp"

namespace wks {

namespace {

double require_positive(double y, const char* what)
{
    if (!(y >= 0.0)) throw InputError(std::string(what) + ": negative argument");
    return y;
}

} // namespace

// ---------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------

OrliczFunction OrliczFunction::make_power(double alpha)
{
    if (!(alpha > 1.0 && alpha <= 2.0)) {
        throw InputError("power family needs alpha in (1, 2]");
    }
    OrliczFunction f;
    f.family_ = OrliczFamily::power;
    f.alpha_ = alpha;
    f.name_ = "power";
    return f;
}

OrliczFunction OrliczFunction::make_gaussian()
{
    OrliczFunction f;
    f.family_ = OrliczFamily::gaussian;
    f.alpha_ = 2.0;
    f.name_ = "gaussian";
    return f;
}

OrliczFunction OrliczFunction::make_weibull_piecewise(double alpha)
{
    if (!(alpha >= 2.0)) {
        throw InputError("weibull family needs alpha >= 2");
    }
    OrliczFunction f;
    f.family_ = OrliczFamily::weibull_piecewise;
    f.alpha_ = alpha;
    f.name_ = "weibull";
    return f;
}

OrliczFunction OrliczFunction::make_custom(std::string name,
                                           std::function<double(double)> evaluate)
{
    if (!evaluate) throw InputError("custom family needs an evaluator");
    OrliczFunction f;
    f.family_ = OrliczFamily::custom;
    f.alpha_ = std::numeric_limits<double>::quiet_NaN();
    f.name_ = std::move(name);
    f.custom_ = std::move(evaluate);
    return f;
}

double OrliczFunction::conjugate_exponent() const
{
    return alpha_ / (alpha_ - 1.0);
}

// ---------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------

double OrliczFunction::value(double x) const
{
    const double a = std::abs(x);
    switch (family_) {
    case OrliczFamily::power:
        return std::pow(a, alpha_) / alpha_;
    case OrliczFamily::gaussian:
        return 0.5 * a * a;
    case OrliczFamily::weibull_piecewise:
        return a <= 1.0 ? a * a / alpha_ : std::pow(a, alpha_) / alpha_;
    case OrliczFamily::custom:
        return custom_(a);
    }
    return 0.0;
}

double OrliczFunction::density(double v) const
{
    require_positive(v, "density");
    switch (family_) {
    case OrliczFamily::power:
        return std::pow(v, alpha_ - 1.0);
    case OrliczFamily::gaussian:
        return v;
    case OrliczFamily::weibull_piecewise:
        return v < 1.0 ? 2.0 * v / alpha_ : std::pow(v, alpha_ - 1.0);
    case OrliczFamily::custom: {
        // central difference of the evaluator; one-sided at the origin
        const double h = std::max(1e-7, 1e-7 * v);
        if (v < h) return (custom_(v + h) - custom_(std::max(0.0, v - h))) / (2.0 * h);
        return (custom_(v + h) - custom_(v - h)) / (2.0 * h);
    }
    }
    return 0.0;
}

double OrliczFunction::conjugate(double x) const
{
    const double a = std::abs(x); // phi even implies phi* even
    const double gamma = conjugate_exponent();
    switch (family_) {
    case OrliczFamily::power:
        return std::pow(a, gamma) / gamma;
    case OrliczFamily::gaussian:
        return 0.5 * a * a;
    case OrliczFamily::weibull_piecewise:
        if (a <= 2.0 / alpha_) return alpha_ * a * a / 4.0;
        if (a <= 1.0) return a - 1.0 / alpha_;
        return std::pow(a, gamma) / gamma;
    case OrliczFamily::custom:
        return numeric_conjugate(custom_, a);
    }
    return 0.0;
}

double OrliczFunction::inverse(double y) const
{
    require_positive(y, "inverse");
    if (y == 0.0) return 0.0;
    switch (family_) {
    case OrliczFamily::power:
        return std::pow(alpha_ * y, 1.0 / alpha_);
    case OrliczFamily::gaussian:
        return std::sqrt(2.0 * y);
    case OrliczFamily::weibull_piecewise:
        return y <= 1.0 / alpha_ ? std::sqrt(alpha_ * y)
                                 : std::pow(alpha_ * y, 1.0 / alpha_);
    case OrliczFamily::custom: {
        double hi = 1.0;
        int guard = 0;
        while (custom_(hi) < y) {
            hi *= 2.0;
            if (++guard > 2000) throw NumericError("inverse: no upper bracket");
        }
        return num::bisect_increasing(custom_, y, 0.0, hi, hi * 1e-15);
    }
    }
    return 0.0;
}

// ---------------------------------------------------------------------
// Numeric conjugate
// ---------------------------------------------------------------------

double numeric_conjugate(const std::function<double(double)>& phi, double x)
{
    const double a = std::abs(x);
    if (a == 0.0) return 0.0;
    const auto g = [&](double y) { return a * y - phi(y); };

    // The maximiser is interior on [0, inf) by superlinearity of phi;
    // double the bracket until the objective starts decreasing.
    double hi = 1.0;
    int guard = 0;
    while (g(hi) >= g(0.5 * hi)) {
        hi *= 2.0;
        if (++guard > 2000) {
            throw NumericError("numeric_conjugate: supremum not bracketed "
                               "(objective never decreases)");
        }
    }
    const double y_star = num::golden_max(g, 0.0, hi, hi * 1e-14, 400);
    return g(y_star);
}

// ---------------------------------------------------------------------
// Condition Q
// ---------------------------------------------------------------------

ConditionQReport check_condition_q(const OrliczFunction& phi)
{
    constexpr int k_max = 40;
    std::vector<double> ratio;
    ratio.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        const double x = std::ldexp(1.0, -k);
        ratio.push_back(phi.value(x) / (x * x));
    }

    ConditionQReport report;
    const double r1 = ratio[k_max - 3];
    const double r2 = ratio[k_max - 2];
    const double r3 = ratio[k_max - 1];
    const double scale = std::max({std::abs(r1), std::abs(r2), std::abs(r3)});

    const bool converged =
        scale > 0.0 && std::abs(r1 - r3) <= 0.01 * scale && std::abs(r2 - r3) <= 0.01 * scale;
    if (converged) {
        report.limit_estimate = r3;
        report.satisfied = r3 > 0.0;
        return report;
    }

    // Not settled: classify by the trend of the last ten ratios.
    bool increasing = ratio[k_max - 1] > ratio[k_max - 10];
    bool decreasing = ratio[k_max - 1] < ratio[k_max - 10];
    for (int k = k_max - 10; k + 1 < k_max; ++k) {
        if (ratio[k + 1] < ratio[k]) increasing = false;
        if (ratio[k + 1] > ratio[k]) decreasing = false;
    }
    if (increasing) {
        report.limit_estimate = std::numeric_limits<double>::infinity();
        report.satisfied = true;
    } else if (decreasing) {
        report.limit_estimate = 0.0;
        report.satisfied = false;
    } else {
        report.limit_estimate = r3;
        report.inconclusive = true;
    }
    return report;
}

// ---------------------------------------------------------------------
// Config grammar
// ---------------------------------------------------------------------

std::string OrliczFunction::to_config() const
{
    std::ostringstream out;
    switch (family_) {
    case OrliczFamily::power:
        out << "power:alpha=" << alpha_;
        return out.str();
    case OrliczFamily::gaussian:
        return "gaussian";
    case OrliczFamily::weibull_piecewise:
        out << "weibull:alpha=" << alpha_;
        return out.str();
    case OrliczFamily::custom:
        throw InputError("custom Orlicz function is not serialisable");
    }
    return {};
}

OrliczFunction OrliczFunction::from_config(std::string_view text)
{
    const auto parse_alpha = [&](std::string_view body) {
        constexpr std::string_view key = "alpha=";
        if (body.substr(0, key.size()) != key) {
            throw InputError("Orlicz config: expected 'alpha=<value>' in '" +
                             std::string(text) + "'");
        }
        std::string num(body.substr(key.size()));
        std::size_t used = 0;
        double alpha = 0.0;
        try {
            alpha = std::stod(num, &used);
        } catch (const std::exception&) {
            throw InputError("Orlicz config: bad alpha in '" + std::string(text) + "'");
        }
        if (used != num.size()) {
            throw InputError("Orlicz config: trailing junk in '" + std::string(text) + "'");
        }
        return alpha;
    };

    if (text == "gaussian") return make_gaussian();
    constexpr std::string_view power_prefix = "power:";
    constexpr std::string_view weibull_prefix = "weibull:";
    if (text.substr(0, power_prefix.size()) == power_prefix) {
        return make_power(parse_alpha(text.substr(power_prefix.size())));
    }
    if (text.substr(0, weibull_prefix.size()) == weibull_prefix) {
        return make_weibull_piecewise(parse_alpha(text.substr(weibull_prefix.size())));
    }
    throw InputError("Orlicz config: unknown family in '" + std::string(text) + "'");
}

} // namespace wks
