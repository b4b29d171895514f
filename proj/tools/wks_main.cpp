// Command-line front end: bound computation, minimal-n solving, parameter
// sweeps, path simulation and the self-verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 admissibility gate violation,
// 3 unsatisfiable search, 4 numeric failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wks/csv.hpp"
#include "wks/errors.hpp"
#include "wks/lp_approx.hpp"
#include "wks/ms_bounds.hpp"
#include "wks/numerics.hpp"
#include "wks/orlicz.hpp"
#include "wks/sampling.hpp"
#include "wks/spectral_sim.hpp"
#include "wks/uniform_approx.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------------
// Output with a reproducibility header
// ---------------------------------------------------------------------

class Report {
public:
    explicit Report(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw wks::InputError("cannot write '" + path + "'");
        }
    }

    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

    void header(const std::string& subcommand,
                const std::vector<std::pair<std::string, std::string>>& kv)
    {
        out() << "# wks " << kVersion << "\n# subcommand=" << subcommand << "\n";
        for (const auto& [k, v] : kv) out() << "# " << k << "=" << v << "\n";
    }

private:
    std::ofstream file_;
};

// ---------------------------------------------------------------------
// Flat key=value config file; flags override file values
// ---------------------------------------------------------------------

class ConfigFile {
public:
    void load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in) throw wks::InputError("cannot open config '" + path + "'");
        std::string line;
        while (std::getline(in, line)) {
            const std::size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) {
                throw wks::InputError("config line without '=': " + line);
            }
            const auto trim = [](std::string s) {
                const std::size_t b = s.find_first_not_of(" \t");
                const std::size_t e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            kv_[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        }
    }

    template <class T>
    void apply(const CLI::Option* opt, const std::string& key, T& target) const
    {
        if (opt != nullptr && opt->count() > 0) return; // flag wins
        const auto it = kv_.find(key);
        if (it == kv_.end()) return;
        std::istringstream ss(it->second);
        T value{};
        if (!(ss >> value)) throw wks::InputError("config: bad value for " + key);
        target = value;
    }

    void apply_string(const CLI::Option* opt, const std::string& key,
                      std::string& target) const
    {
        if (opt != nullptr && opt->count() > 0) return;
        const auto it = kv_.find(key);
        if (it != kv_.end()) target = it->second;
    }

private:
    std::map<std::string, std::string> kv_;
};

// ---------------------------------------------------------------------
// Shared flag bundles
// ---------------------------------------------------------------------

struct ProcessFlags {
    bool gaussian = false;
    std::string phi_config;
    double cx = 1.0;
    double B0 = 1.0;
    double band_edge = 0.0;

    CLI::Option* opt_gaussian = nullptr;
    CLI::Option* opt_phi = nullptr;
    CLI::Option* opt_cx = nullptr;
    CLI::Option* opt_B0 = nullptr;
    CLI::Option* opt_band = nullptr;

    void add_to(CLI::App* cmd)
    {
        opt_gaussian = cmd->add_flag("--gaussian", gaussian,
                                     "gaussian family (phi = x^2/2, C_X = 1)");
        opt_phi = cmd->add_option("--phi", phi_config,
                                  "Orlicz family, e.g. power:alpha=1.5 | gaussian | "
                                  "weibull:alpha=4");
        opt_cx = cmd->add_option("--cx", cx, "determinative constant C_X");
        opt_B0 = cmd->add_option("--B0", B0, "process variance B(0)");
        opt_band = cmd->add_option("--band-edge,--lambda", band_edge,
                                   "spectral band edge");
    }

    void from_config(const ConfigFile& cfg)
    {
        cfg.apply(opt_B0, "process.B0", B0);
        cfg.apply(opt_band, "process.band_edge", band_edge);
        cfg.apply(opt_cx, "process.cx", cx);
        cfg.apply_string(opt_phi, "process.phi", phi_config);
        cfg.apply(opt_gaussian, "process.gaussian", gaussian);
    }

    wks::ProcessSpec build() const
    {
        if (gaussian != phi_config.empty()) {
            throw wks::InputError("choose exactly one of --gaussian or --phi");
        }
        if (gaussian) return wks::ProcessSpec::make_gaussian(B0, band_edge);
        return wks::ProcessSpec::make(B0, band_edge, cx,
                                      wks::OrliczFunction::from_config(phi_config));
    }

    std::vector<std::pair<std::string, std::string>> echo() const
    {
        return {{"process.gaussian", gaussian ? "1" : "0"},
                {"process.phi", gaussian ? "gaussian" : phi_config},
                {"process.cx", fmt(gaussian ? 1.0 : cx)},
                {"process.B0", fmt(B0)},
                {"process.band_edge", fmt(band_edge)}};
    }
};

struct SamplingFlags {
    double omega = 0.0;
    double horizon = 0.0;
    int n = 0;
    double z = 0.0; // 0 = tight default

    CLI::Option* opt_omega = nullptr;
    CLI::Option* opt_T = nullptr;
    CLI::Option* opt_n = nullptr;
    CLI::Option* opt_z = nullptr;

    void add_to(CLI::App* cmd, bool need_n = true)
    {
        opt_omega = cmd->add_option("--omega", omega, "sampling rate (rad/time)")
                        ->required();
        opt_T = cmd->add_option("--T", horizon, "horizon");
        opt_n = cmd->add_option("--n", n, "truncation order");
        if (need_n) opt_n->required();
        opt_z = cmd->add_option("--z", z, "free parameter z in (0,1); default z*");
    }

    void from_config(const ConfigFile& cfg)
    {
        cfg.apply(opt_omega, "sampling.omega", omega);
        cfg.apply(opt_T, "sampling.T", horizon);
        cfg.apply(opt_n, "sampling.n", n);
        cfg.apply(opt_z, "sampling.z", z);
    }

    wks::SamplingConfig build(double band_edge, double horizon_override = 0.0) const
    {
        const double T = horizon_override > 0.0 ? horizon_override : horizon;
        if (z > 0.0) return wks::make_config(omega, band_edge, T, n, z);
        return wks::make_config(omega, band_edge, T, n);
    }

    std::vector<std::pair<std::string, std::string>> echo() const
    {
        return {{"sampling.omega", fmt(omega)},
                {"sampling.T", fmt(horizon)},
                {"sampling.n", std::to_string(n)},
                {"sampling.z", z > 0.0 ? fmt(z) : "z*"}};
    }
};

wks::ThetaChoice parse_theta(const std::string& strategy, double theta_value)
{
    if (strategy == "ratio") return wks::ThetaChoice::ratio();
    if (strategy == "optimize") return wks::ThetaChoice::optimize();
    if (strategy == "fixed") {
        if (!(theta_value > 0.0 && theta_value < 1.0)) {
            throw wks::InputError("--theta must be in (0,1) with fixed strategy");
        }
        return wks::ThetaChoice::fixed(theta_value);
    }
    throw wks::InputError("unknown theta strategy '" + strategy + "'");
}

std::vector<double> parse_range(const std::string& text)
{
    // "lo:hi:steps" inclusive
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' ||
        steps < 1 || !(hi >= lo)) {
        throw wks::InputError("bad range '" + text + "', expected lo:hi:steps");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    }
    return out;
}

void write_plot_script(const std::string& path, const std::string& csv_path,
                       bool grid_mode)
{
    std::ofstream out(path);
    if (!out) throw wks::InputError("cannot write '" + path + "'");
    out << "#!/usr/bin/env python3\n"
           "# renders the sweep written by the wks CLI\n"
           "import csv\n"
           "import matplotlib.pyplot as plt\n"
           "import numpy as np\n"
           "\n"
           "rows = []\n"
        << "with open(" << std::quoted(csv_path) << ") as f:\n"
        << "    for row in csv.reader(l for l in f if not l.startswith('#')):\n"
           "        if row and row[0] != 'eps':\n"
           "            rows.append([float(x) for x in row[:5]])\n"
           "rows = np.array(rows)\n";
    if (grid_mode) {
        out << "eps = np.unique(rows[:, 0]); delta = np.unique(rows[:, 1])\n"
               "n = rows[:, 3].reshape(len(eps), len(delta))\n"
               "plt.pcolormesh(delta, eps, n, shading='nearest')\n"
               "plt.colorbar(label='n')\n"
               "plt.xlabel('delta'); plt.ylabel('eps')\n";
    } else {
        out << "plt.plot(rows[:, 2], rows[:, 3], marker='o')\n"
               "plt.xlabel('p'); plt.ylabel('n')\n";
    }
    out << "plt.tight_layout()\nplt.savefig('sweep.png', dpi=150)\nprint('sweep.png')\n";
}

const char* kLpCsvHeader = "eps,delta,p,n,z,S_np,tail_bound,certified\n";

void write_lp_row(std::ostream& out, const wks::LpCertificate& c)
{
    out << fmt(c.eps) << ',' << fmt(c.delta) << ',' << fmt(c.p) << ',' << c.n << ','
        << fmt(c.z) << ',' << fmt(c.s_np) << ',' << fmt(c.tail_bound) << ','
        << (c.certified ? 1 : 0) << '\n';
}

const char* kUniformCsvHeader = "eps,delta,n,theta,Cn,bn,bound,certified\n";

void write_uniform_row(std::ostream& out, const wks::UniformCertificate& c)
{
    out << fmt(c.eps) << ',' << fmt(c.delta) << ',' << c.n << ',' << fmt(c.theta)
        << ',' << fmt(c.cn) << ',' << fmt(c.bn) << ',' << fmt(c.bound) << ','
        << (c.certified ? 1 : 0) << '\n';
}

// ---------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------

int run_bound_ms(const SamplingFlags& sampling, double B0, double band_edge,
                 double t, std::optional<double> s_opt,
                 const std::string& measure_path, const std::string& output)
{
    if (!(t > 0.0)) throw wks::InputError("--t must be > 0");
    SamplingFlags sf = sampling;
    if (sf.horizon <= 0.0) sf.horizon = std::max(t, s_opt.value_or(t));
    if (sf.z <= 0.0) {
        // tight admissible default at the evaluation time
        const double t_max = std::max(t, s_opt.value_or(t));
        sf.z = wks::z_star(sf.omega, t_max, sf.n);
        if (!(sf.z < 1.0)) {
            throw wks::GateError("gate violated: default z = (omega t/(n pi))^2 = " +
                                 fmt(sf.z) + " must be < 1");
        }
    }
    const wks::SamplingConfig cfg =
        wks::make_config(sf.omega, band_edge, sf.horizon, sf.n, sf.z);

    std::optional<wks::SpectralMeasure> measure;
    if (!measure_path.empty()) measure = wks::SpectralMeasure::from_csv(measure_path);

    Report report(output);
    double bound = 0.0;
    double oracle = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::pair<std::string, std::string>> echo{
        {"process.B0", fmt(B0)}, {"process.band_edge", fmt(band_edge)}};
    for (auto& kv : sf.echo()) echo.push_back(kv);
    echo.emplace_back("t", fmt(t));

    if (s_opt) {
        echo.emplace_back("s", fmt(*s_opt));
        const auto r = wks::bn_bound(cfg, B0, t, *s_opt);
        bound = r.bound_value;
        echo.emplace_back("b_n", fmt(r.bn));
        echo.emplace_back("W_n", fmt(r.wn));
        echo.emplace_back("Q_n", fmt(r.qn));
        if (measure) oracle = wks::exact_increment_ms(*measure, cfg, t, *s_opt);
    } else {
        const auto r = wks::cn_bound(cfg, B0, t);
        bound = r.bound_value;
        echo.emplace_back("C_n", fmt(r.cn));
        echo.emplace_back("belyaev", fmt(wks::belyaev_bound(cfg, B0, t)));
        if (measure) oracle = wks::exact_ms_error(*measure, cfg, t);
    }
    report.header("bound ms", echo);
    report.out() << "t,bound,oracle,admissible\n"
                 << fmt(t) << ',' << fmt(bound) << ',' << fmt(oracle) << ",1\n";
    return 0;
}

int run_bound_lp(const ProcessFlags& process, const SamplingFlags& sampling,
                 double p, double eps, double delta, const std::string& output)
{
    const wks::ProcessSpec spec = process.build();
    const wks::SamplingConfig cfg = sampling.build(spec.band_edge);
    wks::LpCertificate cert;
    if (delta > 0.0) {
        cert = wks::certify_lp(spec, cfg, p, eps, delta);
    } else {
        cert = wks::tail_bound_lp(spec, cfg, p, eps);
    }

    Report report(output);
    auto echo = process.echo();
    for (auto& kv : sampling.echo()) echo.push_back(kv);
    echo.emplace_back("p", fmt(p));
    echo.emplace_back("eps", fmt(eps));
    echo.emplace_back("delta", delta > 0.0 ? fmt(delta) : "none");
    echo.emplace_back("threshold_ok", cert.threshold_ok ? "1" : "0");
    report.header("bound lp", echo);
    report.out() << kLpCsvHeader;
    write_lp_row(report.out(), cert);
    return 0;
}

int run_bound_uniform(const ProcessFlags& process, const SamplingFlags& sampling,
                      double eps, double delta, const std::string& strategy,
                      double theta, const std::string& output)
{
    const wks::ProcessSpec spec = process.build();
    const wks::SamplingConfig cfg = sampling.build(spec.band_edge);
    const wks::UniformCertificate cert =
        wks::certify_uniform(spec, cfg, eps, delta, parse_theta(strategy, theta));

    Report report(output);
    auto echo = process.echo();
    for (auto& kv : sampling.echo()) echo.push_back(kv);
    echo.emplace_back("eps", fmt(eps));
    echo.emplace_back("delta", fmt(delta));
    echo.emplace_back("theta_strategy", strategy);
    echo.emplace_back("theta_gate_ok", cert.theta_gate_ok ? "1" : "0");
    echo.emplace_back("bound_no_prefactor", fmt(cert.bound_no_prefactor));
    echo.emplace_back("eps0_proof_exceeds_cn", cert.eps0_proof_exceeds_cn ? "1" : "0");
    report.header("bound uniform", echo);
    report.out() << kUniformCsvHeader;
    write_uniform_row(report.out(), cert);
    return 0;
}

// ---------------------------------------------------------------------
// min-terms and sweep
// ---------------------------------------------------------------------

int run_min_terms_lp(const ProcessFlags& process, double omega, double horizon,
                     double p, double eps, double delta, long long cap,
                     bool relaxed, const std::string& output)
{
    const wks::ProcessSpec spec = process.build();
    const wks::MinTermsResult result =
        relaxed ? wks::min_terms_lp_relaxed(spec, omega, horizon, p, eps, delta, cap)
                : wks::min_terms_lp(spec, omega, horizon, p, eps, delta, cap);

    Report report(output);
    auto echo = process.echo();
    echo.emplace_back("sampling.omega", fmt(omega));
    echo.emplace_back("sampling.T", fmt(horizon));
    echo.emplace_back("p", fmt(p));
    echo.emplace_back("eps", fmt(eps));
    echo.emplace_back("delta", fmt(delta));
    echo.emplace_back("relaxed", relaxed ? "1" : "0");
    echo.emplace_back("n", std::to_string(result.n));
    echo.emplace_back("z_used", fmt(result.z_used));
    report.header("min-terms lp", echo);
    report.out() << kLpCsvHeader;
    write_lp_row(report.out(), result.certificate);
    std::cerr << "n = " << result.n << " (z* = " << fmt(result.z_used) << ")\n";
    return 0;
}

int run_min_terms_uniform(const ProcessFlags& process, double omega, double horizon,
                          double eps, double delta, const std::string& strategy,
                          double theta, long long cap, const std::string& output)
{
    const wks::ProcessSpec spec = process.build();
    const wks::UniformMinTerms result = wks::min_terms_uniform(
        spec, omega, horizon, eps, delta, parse_theta(strategy, theta), cap);

    Report report(output);
    auto echo = process.echo();
    echo.emplace_back("sampling.omega", fmt(omega));
    echo.emplace_back("sampling.T", fmt(horizon));
    echo.emplace_back("eps", fmt(eps));
    echo.emplace_back("delta", fmt(delta));
    echo.emplace_back("theta_strategy", strategy);
    echo.emplace_back("n", std::to_string(result.n));
    report.header("min-terms uniform", echo);
    report.out() << kUniformCsvHeader;
    write_uniform_row(report.out(), result.certificate);
    std::cerr << "n = " << result.n << "\n";
    return 0;
}

int run_sweep_lp(const ProcessFlags& process, double omega, double horizon,
                 double p, const std::string& eps_range,
                 const std::string& delta_range, const std::string& p_range,
                 double eps_fixed, double delta_fixed, long long cap, bool relaxed,
                 const std::string& output, const std::string& plot_script)
{
    const wks::ProcessSpec spec = process.build();
    Report report(output);
    auto echo = process.echo();
    echo.emplace_back("sampling.omega", fmt(omega));
    echo.emplace_back("sampling.T", fmt(horizon));
    echo.emplace_back("relaxed", relaxed ? "1" : "0");

    const auto solve = [&](double pp, double eps, double delta) {
        return relaxed
                   ? wks::min_terms_lp_relaxed(spec, omega, horizon, pp, eps, delta, cap)
                   : wks::min_terms_lp(spec, omega, horizon, pp, eps, delta, cap);
    };

    if (!p_range.empty()) {
        echo.emplace_back("p_range", p_range);
        echo.emplace_back("eps", fmt(eps_fixed));
        echo.emplace_back("delta", fmt(delta_fixed));
        report.header("sweep lp", echo);
        report.out() << kLpCsvHeader;
        for (double pp : parse_range(p_range)) {
            write_lp_row(report.out(), solve(pp, eps_fixed, delta_fixed).certificate);
        }
        if (!plot_script.empty()) write_plot_script(plot_script, output, false);
        return 0;
    }

    echo.emplace_back("eps_range", eps_range);
    echo.emplace_back("delta_range", delta_range);
    echo.emplace_back("p", fmt(p));
    report.header("sweep lp", echo);
    report.out() << kLpCsvHeader;
    for (double eps : parse_range(eps_range)) {
        for (double delta : parse_range(delta_range)) {
            write_lp_row(report.out(), solve(p, eps, delta).certificate);
        }
    }
    if (!plot_script.empty()) write_plot_script(plot_script, output, true);
    return 0;
}

int run_sweep_uniform(const ProcessFlags& process, double omega, double horizon,
                      const std::string& eps_range, const std::string& delta_range,
                      const std::string& strategy, double theta, long long cap,
                      const std::string& output, const std::string& plot_script)
{
    const wks::ProcessSpec spec = process.build();
    Report report(output);
    auto echo = process.echo();
    echo.emplace_back("sampling.omega", fmt(omega));
    echo.emplace_back("sampling.T", fmt(horizon));
    echo.emplace_back("eps_range", eps_range);
    echo.emplace_back("delta_range", delta_range);
    echo.emplace_back("theta_strategy", strategy);
    report.header("sweep uniform", echo);
    report.out() << kUniformCsvHeader;
    for (double eps : parse_range(eps_range)) {
        for (double delta : parse_range(delta_range)) {
            const auto r = wks::min_terms_uniform(spec, omega, horizon, eps, delta,
                                                  parse_theta(strategy, theta), cap);
            write_uniform_row(report.out(), r.certificate);
        }
    }
    if (!plot_script.empty()) write_plot_script(plot_script, output, true);
    return 0;
}

// ---------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------

double two_sided_weibull_second_moment(double alpha)
{
    return wks::num::adaptive_simpson(
        [alpha](double x) { return 2.0 * x * std::exp(-std::pow(x, alpha) / alpha); },
        0.0, 12.0, 1e-12, 40);
}

int run_simulate(const SamplingFlags& sampling, double band_edge, double B0,
                 const std::string& measure_path, const std::string& coeff,
                 const std::string& metric, double p, double eps,
                 long long trials, std::uint64_t seed, int grid_points,
                 const std::string& dump_path, const std::string& output)
{
    const wks::SamplingConfig cfg = sampling.build(band_edge);
    const wks::SpectralMeasure measure =
        measure_path.empty() ? wks::demo_bandlimited_measure(band_edge, B0)
                             : wks::SpectralMeasure::from_csv(measure_path);

    wks::PathGenerator generate;
    if (coeff == "gaussian") {
        generate = wks::gaussian_path_generator(measure);
    } else if (coeff.rfind("weibull:alpha=", 0) == 0) {
        const double alpha = wks::csv::to_double(coeff.substr(14), "--coeff");
        if (!wks::weibull_klt_convexity_ok(alpha)) {
            throw wks::InputError("weibull coefficients: phi(sqrt(x)) convexity "
                                  "check failed for alpha = " + fmt(alpha));
        }
        // trig expansion matching the measure, scaled to keep variance B(0)
        const double second_moment = two_sided_weibull_second_moment(alpha);
        std::vector<wks::PathFn> basis;
        std::map<double, double> pair_mass;
        for (const auto& a : measure.atoms()) pair_mass[std::abs(a.freq)] += a.mass;
        for (const auto& [freq, mass] : pair_mass) {
            const double amp = std::sqrt(mass / second_moment);
            basis.emplace_back([freq = freq, amp](double t) { return amp * std::cos(freq * t); });
            if (freq > 0.0) {
                basis.emplace_back(
                    [freq = freq, amp](double t) { return amp * std::sin(freq * t); });
            }
        }
        generate = wks::weibull_klt_path_generator(std::move(basis), alpha);
    } else {
        throw wks::InputError("--coeff must be gaussian or weibull:alpha=<a>");
    }

    if (grid_points <= 0) {
        grid_points = std::max(metric == "uniform" ? 512 : 256,
                               wks::min_grid_points(cfg));
        if (grid_points % 2 != 0) ++grid_points;
    }

    std::vector<double> metric_values;
    if (metric == "lp") {
        metric_values = wks::mc_lp_metric(generate, cfg, p, trials, seed, grid_points);
    } else if (metric == "uniform") {
        metric_values = wks::mc_uniform_metric(generate, cfg, trials, seed, grid_points);
    } else {
        throw wks::InputError("--metric must be lp or uniform");
    }

    long long exceed = 0;
    for (double v : metric_values) {
        if (v > eps) ++exceed;
    }
    const double p_hat = static_cast<double>(exceed) / trials;
    const double std_err = std::sqrt(p_hat * (1.0 - p_hat) / trials);

    if (!dump_path.empty()) {
        Report dump(dump_path);
        dump.header("simulate",
                    {{"seed", std::to_string(seed)},
                     {"trials", std::to_string(trials)},
                     {"metric", metric},
                     {"eps", fmt(eps)}});
        dump.out() << "trial,metric_value,exceeded\n";
        for (long long i = 0; i < trials; ++i) {
            dump.out() << i << ',' << fmt(metric_values[static_cast<std::size_t>(i)])
                       << ',' << (metric_values[static_cast<std::size_t>(i)] > eps ? 1 : 0)
                       << '\n';
        }
    }

    Report report(output);
    report.header("simulate", {{"measure", measure_path.empty() ? "demo" : measure_path},
                               {"coeff", coeff},
                               {"metric", metric},
                               {"p", fmt(p)},
                               {"eps", fmt(eps)},
                               {"grid_points", std::to_string(grid_points)},
                               {"trials", std::to_string(trials)},
                               {"seed", std::to_string(seed)}});
    report.out() << "{\"p_hat\": " << fmt(p_hat) << ", \"std_err\": " << fmt(std_err)
                 << ", \"exceed_count\": " << exceed << ", \"trials\": " << trials
                 << ", \"seed\": " << seed << "}\n";
    return 0;
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

struct VerifyContext {
    std::ostream& out;
    bool all_pass = true;

    void line(const std::string& name, bool pass, const std::string& margin)
    {
        all_pass = all_pass && pass;
        out << (pass ? "PASS " : "FAIL ") << name << " " << margin << "\n";
    }
};

int run_verify(std::uint64_t seed, long long trials, int n_override,
               double z_override, const std::string& output)
{
    Report report(output);
    report.header("verify", {{"seed", std::to_string(seed)},
                             {"trials", std::to_string(trials)},
                             {"n_override", std::to_string(n_override)},
                             {"z_override", fmt(z_override)}});
    VerifyContext ctx{report.out()};

    const double omega = 1.0;
    const double band_edge = 0.75;
    const double T = 1.0;
    const wks::ProcessSpec spec = wks::ProcessSpec::make_gaussian(1.0, band_edge);
    const wks::SpectralMeasure measure = wks::demo_bandlimited_measure(band_edge, 1.0);

    // 1. conjugate duality on the built-in families
    {
        double worst = 0.0;
        for (double alpha : {1.25, 1.5, 2.0}) {
            const auto phi = wks::OrliczFunction::make_power(alpha);
            for (int i = 0; i <= 40; ++i) {
                const double x = 0.1 + (10.0 - 0.1) * i / 40.0;
                const auto val = [&phi](double y) { return phi.value(y); };
                worst = std::max(worst, std::abs(phi.conjugate(x) -
                                                 wks::numeric_conjugate(val, x)));
            }
        }
        for (double alpha : {2.0, 3.0, 4.0}) {
            const auto phi = wks::OrliczFunction::make_weibull_piecewise(alpha);
            for (int i = 0; i <= 40; ++i) {
                const double x = 0.1 + (10.0 - 0.1) * i / 40.0;
                const auto val = [&phi](double y) { return phi.value(y); };
                worst = std::max(worst, std::abs(phi.conjugate(x) -
                                                 wks::numeric_conjugate(val, x)));
            }
        }
        ctx.line("conjugate-duality", worst <= 1e-8, "max_abs_err=" + fmt(worst));
    }

    // 2-4. bound-vs-exact-oracle dominations on a seeded fuzz family
    {
        wks::TrialRng rng(seed, 1000001);
        double worst_cn = 0.0, worst_bel = 0.0, worst_inc = 0.0;
        bool gate_hit = false;
        std::string gate_msg;
        for (int rep = 0; rep < 40 && !gate_hit; ++rep) {
            const double L = 0.3 + 0.6 * rng.uniform01();
            std::vector<std::pair<double, double>> pairs;
            const int np = 1 + static_cast<int>(rng.uniform01() * 6);
            for (int j = 0; j < np; ++j) {
                pairs.emplace_back(rng.uniform01() * L * 0.999,
                                   0.05 + rng.uniform01());
            }
            const wks::SpectralMeasure fuzz = wks::SpectralMeasure::symmetric_pairs(pairs);
            const double t = 0.05 + 0.95 * rng.uniform01();
            const double s = 0.05 + 0.95 * rng.uniform01();
            const int n = n_override > 0
                              ? n_override
                              : 5 + static_cast<int>(rng.uniform01() * 30);
            const double z =
                z_override > 0.0
                    ? z_override
                    : std::min(0.95, std::max(wks::z_star(omega, std::max(t, s), n) * 1.5,
                                              0.05));
            try {
                const auto cfg = wks::make_config(omega, L, std::max(t, s), n, z);
                const double exact = wks::exact_ms_error(fuzz, cfg, t);
                const double cn = wks::cn_bound(cfg, fuzz.total_mass(), t).bound_value;
                const double bel = wks::belyaev_bound(cfg, fuzz.total_mass(), t);
                worst_cn = std::max(worst_cn, exact - cn);
                worst_bel = std::max(worst_bel, exact - bel);
                const double inc = wks::exact_increment_ms(fuzz, cfg, t, s);
                const double bn = wks::bn_bound(cfg, fuzz.total_mass(), t, s).bound_value;
                worst_inc = std::max(worst_inc, inc - bn);
            } catch (const wks::GateError& e) {
                gate_hit = true;
                gate_msg = e.what();
            }
        }
        if (gate_hit) {
            report.out() << "GATE " << gate_msg << "\n";
            report.out() << "verdict: GATE\n";
            return 2;
        }
        ctx.line("ms-bound-dominates-oracle", worst_cn <= 1e-12,
                 "max_violation=" + fmt(worst_cn));
        ctx.line("belyaev-dominates-oracle", worst_bel <= 1e-12,
                 "max_violation=" + fmt(worst_bel));
        ctx.line("increment-bound-dominates-oracle", worst_inc <= 1e-12,
                 "max_violation=" + fmt(worst_inc));
    }

    // 5. gaussian closed form equals the generic route
    {
        const auto cfg = wks::make_config(omega, band_edge, T, 12);
        const auto cert = wks::tail_bound_lp(spec, cfg, 2.0, 0.5);
        const double s_hat = cert.s_np;
        const double closed = 2.0 * std::exp(-0.5 * std::pow(0.5 / s_hat, 2.0 / 2.0));
        const double err = std::abs(cert.tail_bound - closed);
        ctx.line("gaussian-closedform-consistency", err <= 1e-12,
                 "abs_err=" + fmt(err));
    }

    // 6. L_p certificate dominates the Monte Carlo frequency
    {
        const auto found = wks::min_terms_lp(spec, omega, T, 2.0, 0.5, 0.1);
        const auto cfg = wks::make_config(omega, band_edge, T, found.n);
        const auto est = wks::mc_lp_exceedance(wks::gaussian_path_generator(measure),
                                               cfg, 2.0, 0.5, trials, seed, 256);
        const bool pass = est.p_hat <= 0.1 + 3.0 * est.std_err;
        ctx.line("lp-certificate-vs-mc", pass,
                 "n=" + std::to_string(found.n) + " p_hat=" + fmt(est.p_hat) +
                     " delta=0.1 se=" + fmt(est.std_err));
    }

    // 7. uniform certificate dominates the Monte Carlo frequency
    {
        const auto found = wks::min_terms_uniform(spec, omega, T, 0.5, 0.1,
                                                  wks::ThetaChoice::ratio());
        const auto cfg = wks::make_config(omega, band_edge, T, found.n);
        const auto est = wks::mc_uniform_exceedance(
            wks::gaussian_path_generator(measure), cfg, 0.5, trials, seed + 1, 512);
        const bool pass = est.p_hat <= 0.1 + 3.0 * est.std_err;
        ctx.line("uniform-certificate-vs-mc", pass,
                 "n=" + std::to_string(found.n) + " p_hat=" + fmt(est.p_hat) +
                     " delta=0.1 se=" + fmt(est.std_err));
    }

    // 8. interpolation identity at the sample lattice
    {
        const auto cfg = wks::make_config(omega, band_edge, 20.0, 8);
        wks::TrialRng rng(seed, 2000002);
        wks::SampleSet samples;
        samples.n = cfg.n;
        samples.values.resize(17);
        for (auto& v : samples.values) v = 2.0 * rng.uniform01() - 1.0;
        double worst = 0.0;
        for (long k = -cfg.n; k <= cfg.n; ++k) {
            const double t = k * wks::num::pi / cfg.omega;
            worst = std::max(worst, std::abs(wks::truncated_sum(samples, cfg, t) -
                                             samples.at(k)));
        }
        ctx.line("interpolation-identity", worst <= 1e-9, "max_abs_err=" + fmt(worst));
    }

    report.out() << "verdict: " << (ctx.all_pass ? "PASS" : "FAIL") << "\n";
    return ctx.all_pass ? 0 : 4;
}

} // namespace

// ---------------------------------------------------------------------

int main(int argc, char** argv)
{
    CLI::App app{"truncation-error bounds and minimal-order solvers for "
                 "cardinal-series approximation of bandlimited processes"};
    app.set_version_flag("--version", std::string("wks ") + kVersion);
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "flat key=value config file (flags override it)");

    ConfigFile config;

    // ---- bound ----
    auto* bound = app.add_subcommand("bound", "compute one bound/certificate");
    bound->require_subcommand(1);

    auto* bound_ms = bound->add_subcommand("ms", "mean-square truncation bound");
    SamplingFlags ms_sampling;
    ms_sampling.add_to(bound_ms);
    double ms_B0 = 1.0, ms_band = 0.0, ms_t = 0.0;
    std::optional<double> ms_s;
    std::string ms_measure, ms_output;
    auto* ms_B0_opt = bound_ms->add_option("--B0", ms_B0, "process variance B(0)");
    bound_ms->add_option("--band-edge,--lambda", ms_band, "band edge")->required();
    bound_ms->add_option("--t", ms_t, "evaluation time")->required();
    double ms_s_value = 0.0;
    auto* ms_s_opt = bound_ms->add_option("--s", ms_s_value,
                                          "second time (increment bound)");
    bound_ms->add_option("--measure", ms_measure, "spectral measure CSV for the oracle");
    bound_ms->add_option("-o,--output", ms_output, "output file (default stdout)");

    // ---- bound lp / uniform ----
    auto* bound_lp = bound->add_subcommand("lp", "L_p tail bound / certificate");
    ProcessFlags lp_process;
    lp_process.add_to(bound_lp);
    SamplingFlags lp_sampling;
    lp_sampling.add_to(bound_lp);
    lp_sampling.opt_T->required();
    double lp_p = 2.0, lp_eps = 0.0, lp_delta = 0.0;
    std::string lp_output;
    bound_lp->add_option("--p", lp_p, "L_p exponent, p >= 1");
    bound_lp->add_option("--eps", lp_eps, "accuracy")->required();
    bound_lp->add_option("--delta", lp_delta, "reliability complement in (0,1)");
    bound_lp->add_option("-o,--output", lp_output, "output file");

    auto* bound_uni = bound->add_subcommand("uniform", "sup-norm tail certificate");
    ProcessFlags uni_process;
    uni_process.add_to(bound_uni);
    SamplingFlags uni_sampling;
    uni_sampling.add_to(bound_uni);
    uni_sampling.opt_T->required();
    double uni_eps = 0.0, uni_delta = 0.0, uni_theta = 0.5;
    std::string uni_strategy = "ratio", uni_output;
    bound_uni->add_option("--eps", uni_eps, "accuracy")->required();
    bound_uni->add_option("--delta", uni_delta, "reliability complement")->required();
    bound_uni->add_option("--theta-strategy", uni_strategy, "ratio|optimize|fixed");
    bound_uni->add_option("--theta", uni_theta, "theta for the fixed strategy");
    bound_uni->add_option("-o,--output", uni_output, "output file");

    // ---- min-terms ----
    auto* mt = app.add_subcommand("min-terms", "solve for the smallest order n");
    mt->require_subcommand(1);

    auto* mt_lp = mt->add_subcommand("lp", "smallest n for the L_p certificate");
    ProcessFlags mt_lp_process;
    mt_lp_process.add_to(mt_lp);
    double mt_lp_omega = 0.0, mt_lp_T = 0.0, mt_lp_p = 2.0, mt_lp_eps = 0.0,
           mt_lp_delta = 0.0;
    long long mt_lp_cap = 1000000000LL;
    bool mt_lp_relaxed = false;
    std::string mt_lp_output;
    mt_lp->add_option("--omega", mt_lp_omega, "sampling rate")->required();
    mt_lp->add_option("--T", mt_lp_T, "horizon")->required();
    mt_lp->add_option("--p", mt_lp_p, "L_p exponent");
    mt_lp->add_option("--eps", mt_lp_eps, "accuracy")->required();
    mt_lp->add_option("--delta", mt_lp_delta, "reliability complement")->required();
    mt_lp->add_option("--cap", mt_lp_cap, "search cap");
    mt_lp->add_flag("--relaxed", mt_lp_relaxed,
                    "gaussian endpoint-majorant certificate");
    mt_lp->add_option("-o,--output", mt_lp_output, "output file");

    auto* mt_uni = mt->add_subcommand("uniform", "smallest n for the sup-norm certificate");
    ProcessFlags mt_uni_process;
    mt_uni_process.add_to(mt_uni);
    double mt_uni_omega = 0.0, mt_uni_T = 0.0, mt_uni_eps = 0.0, mt_uni_delta = 0.0,
           mt_uni_theta = 0.5;
    long long mt_uni_cap = 1000000000LL;
    std::string mt_uni_strategy = "ratio", mt_uni_output;
    mt_uni->add_option("--omega", mt_uni_omega, "sampling rate")->required();
    mt_uni->add_option("--T", mt_uni_T, "horizon")->required();
    mt_uni->add_option("--eps", mt_uni_eps, "accuracy")->required();
    mt_uni->add_option("--delta", mt_uni_delta, "reliability complement")->required();
    mt_uni->add_option("--theta-strategy", mt_uni_strategy, "ratio|optimize|fixed");
    mt_uni->add_option("--theta", mt_uni_theta, "theta for the fixed strategy");
    mt_uni->add_option("--cap", mt_uni_cap, "search cap");
    mt_uni->add_option("-o,--output", mt_uni_output, "output file");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "grid sweeps of the min-terms solver");
    sweep->require_subcommand(1);

    auto* sweep_lp = sweep->add_subcommand("lp", "(eps, delta) grid or p curve");
    ProcessFlags sw_process;
    sw_process.add_to(sweep_lp);
    double sw_omega = 0.0, sw_T = 0.0, sw_p = 2.0, sw_eps = 0.0, sw_delta = 0.0;
    std::string sw_eps_range, sw_delta_range, sw_p_range, sw_output, sw_plot;
    long long sw_cap = 1000000000LL;
    bool sw_relaxed = false;
    sweep_lp->add_option("--omega", sw_omega, "sampling rate")->required();
    sweep_lp->add_option("--T", sw_T, "horizon")->required();
    sweep_lp->add_option("--p", sw_p, "L_p exponent (grid mode)");
    sweep_lp->add_option("--eps-range", sw_eps_range, "lo:hi:steps");
    sweep_lp->add_option("--delta-range", sw_delta_range, "lo:hi:steps");
    sweep_lp->add_option("--p-range", sw_p_range, "lo:hi:steps (curve mode)");
    sweep_lp->add_option("--eps", sw_eps, "accuracy (curve mode)");
    sweep_lp->add_option("--delta", sw_delta, "reliability complement (curve mode)");
    sweep_lp->add_option("--cap", sw_cap, "search cap");
    sweep_lp->add_flag("--relaxed", sw_relaxed, "gaussian endpoint-majorant route");
    sweep_lp->add_option("-o,--output", sw_output, "output CSV")->required();
    sweep_lp->add_option("--plot-script", sw_plot, "write a python plot script here");

    auto* sweep_uni = sweep->add_subcommand("uniform", "(eps, delta) grid");
    ProcessFlags swu_process;
    swu_process.add_to(sweep_uni);
    double swu_omega = 0.0, swu_T = 0.0, swu_theta = 0.5;
    std::string swu_eps_range, swu_delta_range, swu_strategy = "ratio", swu_output,
                swu_plot;
    long long swu_cap = 1000000000LL;
    sweep_uni->add_option("--omega", swu_omega, "sampling rate")->required();
    sweep_uni->add_option("--T", swu_T, "horizon")->required();
    sweep_uni->add_option("--eps-range", swu_eps_range, "lo:hi:steps")->required();
    sweep_uni->add_option("--delta-range", swu_delta_range, "lo:hi:steps")->required();
    sweep_uni->add_option("--theta-strategy", swu_strategy, "ratio|optimize|fixed");
    sweep_uni->add_option("--theta", swu_theta, "theta for the fixed strategy");
    sweep_uni->add_option("--cap", swu_cap, "search cap");
    sweep_uni->add_option("-o,--output", swu_output, "output CSV")->required();
    sweep_uni->add_option("--plot-script", swu_plot, "write a python plot script here");

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "Monte Carlo exceedance estimation");
    SamplingFlags sim_sampling;
    sim_sampling.add_to(sim);
    sim_sampling.opt_T->required();
    double sim_band = 0.0, sim_B0 = 1.0, sim_p = 2.0, sim_eps = 0.0;
    std::string sim_measure, sim_coeff = "gaussian", sim_metric = "lp", sim_dump,
                sim_output;
    long long sim_trials = 1000;
    std::uint64_t sim_seed = 0;
    int sim_grid = 0;
    sim->add_option("--band-edge,--lambda", sim_band, "band edge")->required();
    sim->add_option("--B0", sim_B0, "total mass of the demo measure");
    sim->add_option("--measure", sim_measure, "spectral measure CSV");
    sim->add_option("--coeff", sim_coeff, "gaussian | weibull:alpha=<a>");
    sim->add_option("--metric", sim_metric, "lp | uniform");
    sim->add_option("--p", sim_p, "L_p exponent");
    sim->add_option("--eps", sim_eps, "exceedance level")->required();
    sim->add_option("--trials", sim_trials, "trial count");
    sim->add_option("--seed", sim_seed, "RNG seed")->required();
    sim->add_option("--grid-points", sim_grid, "time grid intervals (even)");
    sim->add_option("--dump", sim_dump, "per-trial CSV dump");
    sim->add_option("-o,--output", sim_output, "output file");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "bound-vs-oracle verification suite");
    std::uint64_t verify_seed = 0;
    long long verify_trials = 2000;
    int verify_n = 0;
    double verify_z = 0.0;
    std::string verify_output;
    verify->add_option("--seed", verify_seed, "RNG seed")->required();
    verify->add_option("--trials", verify_trials, "MC trials per check");
    verify->add_option("--n", verify_n, "override fuzz order (gate demo)");
    verify->add_option("--z", verify_z, "override fuzz z (gate demo)");
    verify->add_option("-o,--output", verify_output, "report file (default stdout)");

    try {
        app.parse(argc, argv);

        if (!config_path.empty()) config.load(config_path);
        ms_sampling.from_config(config);
        lp_process.from_config(config);
        lp_sampling.from_config(config);
        uni_process.from_config(config);
        uni_sampling.from_config(config);

        if (bound_ms->parsed()) {
            config.apply(ms_B0_opt, "process.B0", ms_B0);
            if (ms_s_opt->count() > 0) ms_s = ms_s_value;
            return run_bound_ms(ms_sampling, ms_B0, ms_band, ms_t, ms_s, ms_measure,
                                ms_output);
        }
        if (bound_lp->parsed()) {
            return run_bound_lp(lp_process, lp_sampling, lp_p, lp_eps, lp_delta,
                                lp_output);
        }
        if (bound_uni->parsed()) {
            return run_bound_uniform(uni_process, uni_sampling, uni_eps, uni_delta,
                                     uni_strategy, uni_theta, uni_output);
        }
        if (mt_lp->parsed()) {
            mt_lp_process.from_config(config);
            return run_min_terms_lp(mt_lp_process, mt_lp_omega, mt_lp_T, mt_lp_p,
                                    mt_lp_eps, mt_lp_delta, mt_lp_cap, mt_lp_relaxed,
                                    mt_lp_output);
        }
        if (mt_uni->parsed()) {
            mt_uni_process.from_config(config);
            return run_min_terms_uniform(mt_uni_process, mt_uni_omega, mt_uni_T,
                                         mt_uni_eps, mt_uni_delta, mt_uni_strategy,
                                         mt_uni_theta, mt_uni_cap, mt_uni_output);
        }
        if (sweep_lp->parsed()) {
            sw_process.from_config(config);
            return run_sweep_lp(sw_process, sw_omega, sw_T, sw_p, sw_eps_range,
                                sw_delta_range, sw_p_range, sw_eps, sw_delta, sw_cap,
                                sw_relaxed, sw_output, sw_plot);
        }
        if (sweep_uni->parsed()) {
            swu_process.from_config(config);
            return run_sweep_uniform(swu_process, swu_omega, swu_T, swu_eps_range,
                                     swu_delta_range, swu_strategy, swu_theta,
                                     swu_cap, swu_output, swu_plot);
        }
        if (sim->parsed()) {
            sim_sampling.from_config(config);
            config.apply(nullptr, "mc.trials", sim_trials);
            config.apply(nullptr, "mc.grid_points", sim_grid);
            return run_simulate(sim_sampling, sim_band, sim_B0, sim_measure,
                                sim_coeff, sim_metric, sim_p, sim_eps, sim_trials,
                                sim_seed, sim_grid, sim_dump, sim_output);
        }
        if (verify->parsed()) {
            return run_verify(verify_seed, verify_trials, verify_n, verify_z,
                              verify_output);
        }
        std::cerr << app.help();
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const wks::GateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wks::UnsatisfiableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wks::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const wks::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
