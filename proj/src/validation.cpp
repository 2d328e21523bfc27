#include "linfpt/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace linfpt {

double OracleResult::empirical_cdf(double t) const {
    const auto it = std::upper_bound(crossing_times.begin(),
                                     crossing_times.end(), t);
    return static_cast<double>(it - crossing_times.begin()) /
           static_cast<double>(n_paths());
}

OracleResult euler_fpt_oracle(double a, double b, const OracleConfig& cfg,
                              RandomSource& rng) {
    if (a < 0.0 || b < 0.0) {
        throw std::invalid_argument("oracle requires a >= 0 and b >= 0");
    }
    if (!(cfg.dt > 0.0) || !(cfg.horizon > 0.0) || cfg.dt > cfg.horizon ||
        cfg.n_paths < 1) {
        throw std::invalid_argument("invalid oracle configuration");
    }
    OracleResult res;
    res.crossing_times.reserve(cfg.n_paths);
    const double sq_dt = std::sqrt(cfg.dt);
    const std::uint64_t n_steps =
        static_cast<std::uint64_t>(std::floor(cfg.horizon / cfg.dt + 1e-9));
    for (std::uint64_t p = 0; p < cfg.n_paths; ++p) {
        double w = 0.0;
        bool crossed = (a == 0.0);
        double hit = 0.0;
        if (!crossed) {
            for (std::uint64_t i = 1; i <= n_steps; ++i) {
                w += sq_dt * rng.normal();
                const double t = static_cast<double>(i) * cfg.dt;
                if (std::abs(w) >= a + b * t) {
                    crossed = true;
                    hit = t;
                    break;
                }
            }
        }
        if (crossed) {
            res.crossing_times.push_back(hit);
        } else {
            ++res.censored;
        }
    }
    std::sort(res.crossing_times.begin(), res.crossing_times.end());
    return res;
}

OracleResult euler_fpt_oracle(const Boundary& boundary,
                              const OracleConfig& cfg, RandomSource& rng) {
    return euler_fpt_oracle(boundary.a, boundary.b, cfg, rng);
}

double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf_fn) {
    if (sorted_samples.empty()) {
        throw EmptySample("ks_statistic requires a nonempty sample");
    }
    const double n = static_cast<double>(sorted_samples.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        const double f = cdf_fn(sorted_samples[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        sup = std::max({sup, std::abs(hi), std::abs(lo)});
    }
    return sup;
}

bool verify_left_tail(const Boundary& boundary, int n_exponent) {
    if (n_exponent < 1) {
        throw std::invalid_argument("verify_left_tail requires n >= 1");
    }
    std::vector<double> log_vals;
    for (int e = 5; e <= 20; ++e) {
        const double t = std::ldexp(1.0, -e);
        const double lv = log_q(boundary, t) - n_exponent * std::log(t);
        log_vals.push_back(lv);
    }
    // Eventually decreasing: once the sequence first decreases it must keep
    // decreasing, and the final value must sit 10 decades below the first.
    bool decreasing = false;
    for (std::size_t i = 1; i < log_vals.size(); ++i) {
        if (log_vals[i] < log_vals[i - 1]) {
            decreasing = true;
        } else if (decreasing) {
            return false;
        }
    }
    if (!decreasing) return false;
    return log_vals.back() - log_vals.front() < std::log(1e-10);
}

bool verify_right_tail(const Boundary& boundary) {
    const double a = boundary.a;
    const double b = boundary.b;

    // Analytic coefficient from the right-tail bound evaluated at the grid
    // minimum t = 10.
    double coeff = 0.0;
    for (int k = 1; k < 100000; ++k) {
        const double dk = static_cast<double>(k);
        const double term = std::exp(-2.0 * a * b * (dk * dk - dk)) *
                            (1.0 + (a + 2.0 * a * dk) / (b * 10.0));
        coeff += term;
        if (term < 1e-18 * coeff) break;
    }
    const double log_bound =
        std::log(2.0 / std::sqrt(2.0 * M_PI) * b * coeff);

    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i <= 10; ++i) {
        const double t = 10.0 * std::ldexp(1.0, i);
        const double log_r = log_q(boundary, t) + 0.5 * std::log(t) +
                             b * b * t / 2.0;
        if (log_r > log_bound) return false;
        if (i > 0 && log_r > prev + std::log(1.01)) return false;
        prev = log_r;
    }
    return true;
}

std::uint64_t verify_envelope(const Boundary& boundary,
                              const EnvelopeConfig& env,
                              std::uint64_t grid_size) {
    const double t_hi = envelope_grid_upper_edge(boundary, 1e-10);
    const double t_lo = t_hi * 1e-9;
    const double log_step =
        std::log(t_hi / t_lo) / static_cast<double>(grid_size - 1);

    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < grid_size; ++i) {
        const double t = t_lo * std::exp(log_step * static_cast<double>(i));
        const QBracket br = q_scaled_bracket(boundary, t);
        const double hi = std::max(br.hi, 0.0);
        if (hi <= 0.0) continue;
        const double log_q_hi = br.log_scale + std::log(hi);
        if (log_q_hi > env.log_m_prime + log_gamma_pdf(t, env.alpha, env.rate)) {
            ++violations;
        }
    }
    return violations;
}

}  // namespace linfpt
