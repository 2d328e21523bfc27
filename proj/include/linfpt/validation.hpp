#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "linfpt/sampler.hpp"

namespace linfpt {

struct OracleConfig {
    double dt;
    double horizon;
    std::uint64_t n_paths;
};

struct OracleResult {
    std::vector<double> crossing_times;  // sorted ascending
    std::uint64_t censored = 0;

    std::uint64_t n_paths() const {
        return crossing_times.size() + censored;
    }
    // Empirical P[tau <= t], censored paths counted as not crossed.
    double empirical_cdf(double t) const;
};

// Discretized Brownian-crossing reference: Gaussian increments on a grid,
// crossing detected at grid points only. The grid misses intra-step
// excursions, so the oracle CDF sits below the true CDF, with O(sqrt(dt))
// bias. Accepts a = 0 (every path crosses at the first step).
OracleResult euler_fpt_oracle(double a, double b, const OracleConfig& cfg,
                              RandomSource& rng);
OracleResult euler_fpt_oracle(const Boundary& boundary,
                              const OracleConfig& cfg, RandomSource& rng);

// One-sample Kolmogorov-Smirnov statistic of sorted samples against cdf_fn.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf_fn);

// Checks the super-polynomial left-tail decay: Q(t)/t^n evaluated on a
// dyadic grid down to 2^-20 decreases toward 0. Works in log space.
bool verify_left_tail(const Boundary& boundary, int n_exponent);

// Checks the right-tail envelope: R(t) = Q(t) sqrt(t) e^{b^2 t / 2} stays
// below the analytic coefficient and does not grow across doublings.
bool verify_right_tail(const Boundary& boundary);

// Number of grid points where the bracketed upper bound of Q(t) exceeds
// M' g(t); 0 for a sound envelope.
std::uint64_t verify_envelope(const Boundary& boundary,
                              const EnvelopeConfig& env,
                              std::uint64_t grid_size);

struct GofReport {
    double ks_statistic = 0.0;
    std::uint64_t n = 0;
    double finite_fraction = 0.0;
    std::uint64_t band_violations = 0;
};

}  // namespace linfpt
