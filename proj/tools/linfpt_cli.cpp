#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linfpt/distribution.hpp"
#include "linfpt/sampler.hpp"
#include "linfpt/validation.hpp"

namespace {

using namespace linfpt;

// 17 significant digits: bit-faithful for 64-bit floats.
std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

std::vector<double> parse_time_list(const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) {
            throw std::invalid_argument("bad time value: " + item);
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty time list");
    return out;
}

int run_sample(double a, double b, std::uint64_t n, std::uint64_t seed,
               double alpha, const std::string& format,
               const std::string& out_path) {
    FirstPassageSampler sampler(a, b, alpha);
    RandomSource rng(seed);
    SamplerStats stats;

    std::vector<FptOutcome> draws;
    draws.reserve(n);
    std::uint64_t finite = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        draws.push_back(sampler.draw(rng, stats));
        finite += draws.back().finite ? 1 : 0;
    }
    const double finite_fraction =
        static_cast<double>(finite) / static_cast<double>(n);
    const bool have_acc = stats.proposals > 0;
    const double acc = have_acc ? static_cast<double>(stats.accepted) /
                                      static_cast<double>(stats.proposals)
                                : 0.0;

    OutputTarget out;
    out.open(out_path);
    auto& os = out.stream();
    if (format == "json") {
        os << "{\"samples\":[";
        for (std::uint64_t i = 0; i < n; ++i) {
            if (i) os << ",";
            os << "{\"index\":" << i << ",\"outcome\":\""
               << (draws[i].finite ? "finite" : "infinite") << "\"";
            if (draws[i].finite) os << ",\"time\":" << num(draws[i].time);
            os << "}";
        }
        os << "],\"summary\":{\"finite_fraction\":" << num(finite_fraction)
           << ",\"acceptance_rate\":";
        if (have_acc) {
            os << num(acc);
        } else {
            os << "null";
        }
        os << ",\"max_terms_used\":" << stats.max_terms_used << "}}\n";
    } else {
        os << "index,outcome,time\n";
        for (std::uint64_t i = 0; i < n; ++i) {
            os << i << "," << (draws[i].finite ? "finite" : "infinite") << ",";
            if (draws[i].finite) os << num(draws[i].time);
            os << "\n";
        }
        os << "# finite_fraction=" << num(finite_fraction)
           << ",acceptance_rate=" << (have_acc ? num(acc) : std::string())
           << ",max_terms_used=" << stats.max_terms_used << "\n";
    }
    return 0;
}

int run_cdf(double a, double b, const std::string& times, double tol,
            const std::string& format, const std::string& out_path) {
    Boundary boundary(a, b);
    ToleranceSpec ts(tol);
    const auto ts_list = parse_time_list(times);
    OutputTarget out;
    out.open(out_path);
    auto& os = out.stream();
    if (format == "json") {
        os << "[";
        for (std::size_t i = 0; i < ts_list.size(); ++i) {
            if (i) os << ",";
            const double t = ts_list[i];
            os << "{\"t\":" << num(t) << ",\"cdf\":" << num(cdf(boundary, t, ts))
               << ",\"conditional_cdf\":" << num(conditional_cdf(boundary, t, ts))
               << "}";
        }
        os << "]\n";
    } else {
        os << "t,cdf,conditional_cdf\n";
        for (const double t : ts_list) {
            os << num(t) << "," << num(cdf(boundary, t, ts)) << ","
               << num(conditional_cdf(boundary, t, ts)) << "\n";
        }
    }
    return 0;
}

int run_prob_finite(double a, double b, double tol,
                    const std::string& out_path) {
    Boundary boundary(a, b);
    OutputTarget out;
    out.open(out_path);
    out.stream() << num(prob_finite(boundary, ToleranceSpec(tol))) << "\n";
    return 0;
}

int run_envelope(double a, double b, double alpha, std::uint64_t grid,
                 const std::string& out_path) {
    Boundary boundary(a, b);
    EnvelopeOptions opts;
    opts.grid_points = static_cast<int>(std::max<std::uint64_t>(grid, 2));
    const EnvelopeConfig env = calibrate_envelope(boundary, alpha, opts);
    const double c = prob_finite(boundary);
    const std::uint64_t violations = verify_envelope(boundary, env, grid);
    OutputTarget out;
    out.open(out_path);
    out.stream() << "{\"alpha\":" << num(env.alpha)
                 << ",\"rate\":" << num(env.rate)
                 << ",\"log_m_prime\":" << num(env.log_m_prime)
                 << ",\"predicted_acceptance\":"
                 << num(c / std::exp(env.log_m_prime))
                 << ",\"violations\":" << violations << "}\n";
    return 0;
}

int run_validate(double a, double b, std::uint64_t n, std::uint64_t seed,
                 double alpha, const std::string& out_path) {
    Boundary boundary(a, b);
    FirstPassageSampler sampler(a, b, alpha);
    RandomSource rng(seed);
    SamplerStats stats;

    std::vector<double> finite_times;
    for (std::uint64_t i = 0; i < n; ++i) {
        const FptOutcome o = sampler.draw(rng, stats);
        if (o.finite) finite_times.push_back(o.time);
    }
    std::sort(finite_times.begin(), finite_times.end());

    GofReport report;
    report.n = n;
    report.finite_fraction =
        static_cast<double>(finite_times.size()) / static_cast<double>(n);
    report.ks_statistic = ks_statistic(
        finite_times,
        [&](double t) { return conditional_cdf(boundary, t); });

    const double expected_c = prob_finite(boundary);
    const double ks_threshold =
        1.63 / std::sqrt(static_cast<double>(finite_times.size()));
    const double ff_sigma = std::sqrt(expected_c * (1.0 - expected_c) /
                                      static_cast<double>(n));
    if (report.ks_statistic >= ks_threshold) ++report.band_violations;
    if (std::abs(report.finite_fraction - expected_c) > 3.29 * ff_sigma) {
        ++report.band_violations;
    }

    OutputTarget out;
    out.open(out_path);
    out.stream() << "{\"ks_statistic\":" << num(report.ks_statistic)
                 << ",\"ks_threshold_99\":" << num(ks_threshold)
                 << ",\"n\":" << report.n
                 << ",\"n_finite\":" << finite_times.size()
                 << ",\"finite_fraction\":" << num(report.finite_fraction)
                 << ",\"expected_C\":" << num(expected_c)
                 << ",\"band_violations\":" << report.band_violations
                 << ",\"pass\":" << (report.band_violations == 0 ? "true" : "false")
                 << "}\n";
    return 0;
}

int run_oracle(double a, double b, double dt, double horizon, std::uint64_t n,
               std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
    RandomSource rng(seed);
    const OracleResult res = euler_fpt_oracle(a, b, {dt, horizon, n}, rng);
    const double censored_fraction =
        static_cast<double>(res.censored) / static_cast<double>(n);
    OutputTarget out;
    out.open(out_path);
    auto& os = out.stream();
    const auto& xs = res.crossing_times;
    if (format == "json") {
        os << "{\"n_paths\":" << n << ",\"censored_fraction\":"
           << num(censored_fraction) << ",\"table\":[";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) os << ",";
            os << "{\"time\":" << num(xs[i]) << ",\"cdf\":"
               << num(static_cast<double>(i + 1) / static_cast<double>(n))
               << "}";
        }
        os << "]}\n";
    } else {
        os << "time,empirical_cdf\n";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            os << num(xs[i]) << ","
               << num(static_cast<double>(i + 1) / static_cast<double>(n))
               << "\n";
        }
        os << "# censored_fraction=" << num(censored_fraction) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact first-passage-time sampler for the symmetric linear "
                 "boundary +/-(a+bt)"};
    app.require_subcommand(1);

    double a = 0.0, b = 0.0, alpha = 0.5, tol = 1e-12;
    double dt = 1e-3, horizon = 10.0;
    std::uint64_t n = 1, seed = 0, grid = 4096;
    std::string format = "csv", out_path, times;

    auto* sample = app.add_subcommand("sample", "Draw first-passage times");
    sample->add_option("--a", a)->required();
    sample->add_option("--b", b)->required();
    sample->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed)->required();
    sample->add_option("--alpha", alpha)->check(CLI::Range(0.5, 1e9));
    sample->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json"}));
    sample->add_option("--out", out_path);

    auto* cdf_cmd = app.add_subcommand("cdf", "Evaluate the defective CDF");
    cdf_cmd->add_option("--a", a)->required();
    cdf_cmd->add_option("--b", b)->required();
    cdf_cmd->add_option("--t", times, "comma-separated times")->required();
    cdf_cmd->add_option("--tol", tol)->check(CLI::Range(1e-300, 0.999999));
    cdf_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json"}));
    cdf_cmd->add_option("--out", out_path);

    auto* pf = app.add_subcommand("prob-finite", "P[tau < infinity]");
    pf->add_option("--a", a)->required();
    pf->add_option("--b", b)->required();
    pf->add_option("--tol", tol)->check(CLI::Range(1e-300, 0.999999));
    pf->add_option("--out", out_path);

    auto* env = app.add_subcommand("envelope", "Calibrate the gamma envelope");
    env->add_option("--a", a)->required();
    env->add_option("--b", b)->required();
    env->add_option("--alpha", alpha)->check(CLI::Range(0.5, 1e9));
    env->add_option("--grid", grid)->check(CLI::PositiveNumber);
    env->add_option("--out", out_path);

    auto* val = app.add_subcommand("validate", "Goodness-of-fit report");
    val->add_option("--a", a)->required();
    val->add_option("--b", b)->required();
    val->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    val->add_option("--seed", seed)->required();
    val->add_option("--alpha", alpha)->check(CLI::Range(0.5, 1e9));
    val->add_option("--out", out_path);

    auto* orc = app.add_subcommand("oracle", "Discretized crossing oracle");
    orc->add_option("--a", a)->required();
    orc->add_option("--b", b)->required();
    orc->add_option("--dt", dt)->required()->check(CLI::PositiveNumber);
    orc->add_option("--horizon", horizon)->required()->check(CLI::PositiveNumber);
    orc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    orc->add_option("--seed", seed)->required();
    orc->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json"}));
    orc->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sample->parsed()) {
            return run_sample(a, b, n, seed, alpha, format, out_path);
        }
        if (cdf_cmd->parsed()) {
            return run_cdf(a, b, times, tol, format, out_path);
        }
        if (pf->parsed()) return run_prob_finite(a, b, tol, out_path);
        if (env->parsed()) return run_envelope(a, b, alpha, grid, out_path);
        if (val->parsed()) return run_validate(a, b, n, seed, alpha, out_path);
        if (orc->parsed()) {
            return run_oracle(a, b, dt, horizon, n, seed, format, out_path);
        }
    } catch (const linfpt::UnsupportedBoundary& e) {
        std::cerr << "error: unsupported-boundary: " << e.what() << "\n";
        return 3;
    } catch (const linfpt::UnresolvedComparison& e) {
        std::cerr << "error: unresolved-comparison: " << e.what() << "\n";
        return 4;
    } catch (const linfpt::CalibrationFailure& e) {
        std::cerr << "error: calibration-failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid-argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
