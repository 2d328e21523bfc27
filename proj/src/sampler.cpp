#include "linfpt/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace linfpt {

double log_gamma_pdf(double t, double alpha, double rate) {
    if (!(t > 0.0)) return -std::numeric_limits<double>::infinity();
    return alpha * std::log(rate) + (alpha - 1.0) * std::log(t) - rate * t -
           std::lgamma(alpha);
}

namespace {

// Upper bound on log of sum_{k>=1} (b + (a + 2ak)/t_lo) exp(-2ab(k^2-k)),
// the Lemma-style right-tail coefficient evaluated at the grid edge.
double log_tail_coeff(const Boundary& boundary, double t_lo) {
    const double a = boundary.a;
    const double b = boundary.b;
    double sum = 0.0;
    for (int k = 1; k < 100000; ++k) {
        const double dk = static_cast<double>(k);
        const double term = (b + (a + 2.0 * a * dk) / t_lo) *
                            std::exp(-2.0 * a * b * (dk * dk - dk));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return std::log(sum);
}

}  // namespace

double envelope_grid_upper_edge(const Boundary& boundary, double tail_mass) {
    // Upper edge T with conditional mass beyond T below tail_mass, decided
    // from the analytic right-tail bound
    //   Q(t) <= (2/sqrt(2 pi)) e^{-ab} t^{-3/2} e^{-b^2 t/2}
    //           * sum_k (a + bt + 2ak) exp(-2ab(k^2-k)),
    // whose integrand beyond T is at most its value at T times e^{-rate(t-T)}.
    // All in logs: safe even when C_{a,b} underflows the working precision.
    const double a = boundary.a;
    const double b = boundary.b;
    const double rate = b * b / 2.0;
    double s0 = 0.0;  // sum_k exp(-2ab(k^2-k))
    double s1 = 0.0;  // sum_k (a + 2ak) exp(-2ab(k^2-k))
    for (int k = 1; k < 100000; ++k) {
        const double dk = static_cast<double>(k);
        const double w = std::exp(-2.0 * a * b * (dk * dk - dk));
        s0 += w;
        s1 += (a + 2.0 * a * dk) * w;
        if (w < 1e-18 * s0) break;
    }
    const double log_c = std::log(prob_finite(boundary, ToleranceSpec(1e-15)));
    const double log_pref = std::log(2.0 / std::sqrt(2.0 * M_PI)) - a * b;

    double t = 2.0 / (b * b);
    for (;;) {
        // integrand at T is decreasing in t, so the remaining mass is below
        // integrand(T) / rate
        const double log_integrand =
            log_pref - 1.5 * std::log(t) - rate * t + std::log(s1 + b * t * s0);
        const double log_tail_mass = log_integrand - std::log(rate) - log_c;
        if (log_tail_mass < std::log(tail_mass)) return t;
        t *= 2.0;
        if (!std::isfinite(t)) {
            throw CalibrationFailure("could not locate the grid upper edge");
        }
    }
}

EnvelopeConfig calibrate_envelope(const Boundary& boundary, double alpha,
                                  const EnvelopeOptions& opts) {
    if (!(alpha >= 0.5)) {
        throw std::invalid_argument("envelope requires alpha >= 1/2");
    }
    const double rate = boundary.b * boundary.b / 2.0;
    const double t_hi = envelope_grid_upper_edge(boundary, opts.tail_mass);

    const double t_lo = t_hi * 1e-9;
    const int n = std::max(opts.grid_points, 2);
    const double log_step = std::log(t_hi / t_lo) / (n - 1);

    double sup_log_ratio = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double t = t_lo * std::exp(log_step * i);
        const QBracket br = q_scaled_bracket(boundary, t);
        const double hi = std::max(br.hi, 0.0);
        if (hi <= 0.0) continue;
        const double log_ratio =
            br.log_scale + std::log(hi) - log_gamma_pdf(t, alpha, rate);
        sup_log_ratio = std::max(sup_log_ratio, log_ratio);
    }

    // Beyond the grid, Q(t) <= (2/sqrt(2 pi)) e^{-ab} t^{-3/2} e^{-rate t}
    // times the tail coefficient, and t^{alpha - 1/2} is nondecreasing, so
    // the ratio to g is bounded by its value at t_hi.
    const double log_tail =
        std::log(2.0 / std::sqrt(2.0 * M_PI)) - boundary.a * boundary.b +
        log_tail_coeff(boundary, t_hi) + std::lgamma(alpha) -
        alpha * std::log(rate) - (alpha - 0.5) * std::log(t_hi);

    const double log_m_prime =
        std::log(opts.safety) + std::max(sup_log_ratio, log_tail);
    if (!std::isfinite(log_m_prime)) {
        throw CalibrationFailure("domination constant is not finite");
    }

    EnvelopeConfig env{alpha, rate, log_m_prime, boundary};

    // Construction-time check: the certified constant dominates on the grid.
    for (int i = 0; i < n; ++i) {
        const double t = t_lo * std::exp(log_step * i);
        const QBracket br = q_scaled_bracket(boundary, t);
        const double hi = std::max(br.hi, 0.0);
        if (hi <= 0.0) continue;
        if (br.log_scale + std::log(hi) >
            log_m_prime + log_gamma_pdf(t, alpha, rate)) {
            throw CalibrationFailure("domination violated on calibration grid");
        }
    }
    return env;
}

bool finiteness_decision(const Boundary& boundary, double u) {
    const auto series = PartialSumSeries::normalizer(boundary);
    return decide_compare(series, u) == CompareOutcome::Greater;
}

bool finiteness_trial(const Boundary& boundary, RandomSource& rng) {
    return finiteness_decision(boundary, rng.uniform());
}

double conditional_sample(const Boundary& boundary, const EnvelopeConfig& env,
                          RandomSource& rng, SamplerStats& stats,
                          const SamplerOptions& opts) {
    for (std::uint64_t p = 0; p < opts.proposal_cap; ++p) {
        ++stats.proposals;
        const double u = rng.uniform();
        const double v = rng.gamma(env.alpha, env.rate);
        const auto series = PartialSumSeries::density_q_scaled(boundary, v);
        const double log_s = env.log_m_prime +
                             log_gamma_pdf(v, env.alpha, env.rate) +
                             std::log(u);
        const double s_scaled = std::exp(log_s - series.log_scale());
        const DecideResult r =
            decide_compare_detail(series, s_scaled, opts.decide);
        stats.max_terms_used = std::max(
            stats.max_terms_used, static_cast<std::uint64_t>(r.terms_used));
        if (r.unresolved_mapped) ++stats.unresolved_events;
        if (r.outcome == CompareOutcome::Greater) {
            ++stats.accepted;
            return v;
        }
    }
    throw ProposalExhaustion("acceptance-rejection proposal cap exceeded");
}

FirstPassageSampler::FirstPassageSampler(double a, double b, double alpha,
                                         const EnvelopeOptions& env_opts)
    : a_(a), b_(b) {
    if (a < 0.0 || b < 0.0) {
        throw std::invalid_argument("boundary coefficients must be >= 0");
    }
    if (a == 0.0) return;  // hits at time zero, nothing to calibrate
    if (b == 0.0) {
        throw UnsupportedBoundary(
            "a > 0, b = 0 is unsupported: the gamma proposal rate b^2/2 "
            "degenerates; use a constant-boundary method (e.g. Burq-Jones) "
            "instead");
    }
    boundary_.emplace(a, b);
    env_ = calibrate_envelope(*boundary_, alpha, env_opts);
}

FptOutcome FirstPassageSampler::draw(RandomSource& rng, SamplerStats& stats,
                                     const SamplerOptions& opts) const {
    if (a_ == 0.0) return FptOutcome::at(0.0);
    if (!finiteness_trial(*boundary_, rng)) return FptOutcome::infinite();
    return FptOutcome::at(
        conditional_sample(*boundary_, *env_, rng, stats, opts));
}

}  // namespace linfpt
