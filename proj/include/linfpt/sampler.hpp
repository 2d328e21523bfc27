#pragma once

#include <cstdint>
#include <optional>

#include "linfpt/distribution.hpp"
#include "linfpt/random_source.hpp"
#include "linfpt/series.hpp"

namespace linfpt {

// Gamma proposal for the acceptance-rejection loop: rate is pinned to
// b^2/2 for the boundary being sampled; exp(log_m_prime) dominates the
// unnormalized density Q(t) <= M' * g(t; alpha, rate).
struct EnvelopeConfig {
    double alpha;
    double rate;
    double log_m_prime;
    Boundary boundary;
};

struct SamplerStats {
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
    std::uint64_t max_terms_used = 0;
    std::uint64_t unresolved_events = 0;
};

// Sample result: a finite positive passage time or the atom at infinity.
struct FptOutcome {
    bool finite;
    double time;  // meaningful only when finite

    static FptOutcome at(double t) { return {true, t}; }
    static FptOutcome infinite() { return {false, 0.0}; }
};

struct EnvelopeOptions {
    int grid_points = 4096;
    double safety = 2.0;
    double tail_mass = 1e-10;  // conditional mass allowed beyond the grid
};

// log of the gamma(alpha, rate) density at t > 0.
double log_gamma_pdf(double t, double alpha, double rate);

// Grid upper edge T with conditional mass beyond T certifiably below
// tail_mass, from the analytic right-tail bound (log-space; robust when
// C_{a,b} is far below working precision).
double envelope_grid_upper_edge(const Boundary& boundary, double tail_mass);

// Certifies a domination constant M' = safety * max(grid supremum of
// Q(t)/g(t), analytic right-tail bound beyond the grid). Any overestimate
// costs acceptance rate only, never correctness.
EnvelopeConfig calibrate_envelope(const Boundary& boundary, double alpha,
                                  const EnvelopeOptions& opts = {});

// Exact Bernoulli(C_{a,b}) decision for a forced uniform u: Finite when
// consecutive normalizer partial sums bracket above u, Infinite when below.
bool finiteness_decision(const Boundary& boundary, double u);

// Draws U and decides finiteness of tau_{a,b}.
bool finiteness_trial(const Boundary& boundary, RandomSource& rng);

struct SamplerOptions {
    std::uint64_t proposal_cap = 1000000;
    DecideOptions decide;
};

// Acceptance-rejection draw of tau_{a,b} conditioned on finiteness: propose
// V ~ Gamma(alpha, b^2/2), accept when the density series limit exceeds
// M' g(V) U, with the comparison resolved in finite time.
double conditional_sample(const Boundary& boundary, const EnvelopeConfig& env,
                          RandomSource& rng, SamplerStats& stats,
                          const SamplerOptions& opts = {});

// Full sampler front end handling the degenerate boundaries: a = 0 hits at
// time zero; a > 0, b = 0 is unsupported (the proposal rate b^2/2
// degenerates; a constant-boundary method would be needed instead).
class FirstPassageSampler {
  public:
    FirstPassageSampler(double a, double b, double alpha = 0.5,
                        const EnvelopeOptions& env_opts = {});

    FptOutcome draw(RandomSource& rng, SamplerStats& stats,
                    const SamplerOptions& opts = {}) const;

    const std::optional<EnvelopeConfig>& envelope() const { return env_; }

  private:
    double a_;
    double b_;
    std::optional<Boundary> boundary_;
    std::optional<EnvelopeConfig> env_;
};

}  // namespace linfpt
