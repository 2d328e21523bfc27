#pragma once

#include <stdexcept>

#include "linfpt/series.hpp"

namespace linfpt {

struct ToleranceSpec {
    double abs_tol = 1e-12;

    ToleranceSpec() = default;
    explicit ToleranceSpec(double tol) : abs_tol(tol) {
        if (!(tol > 0.0) || !(tol < 1.0)) {
            throw std::invalid_argument("abs_tol must lie in (0, 1)");
        }
    }
};

// Phi(hi) - Phi(lo), evaluated through the complementary error function in
// the numerically stable tail direction. Absolute error <= 1e-14.
double std_normal_integral(double lo, double hi);

// C_{a,b} = P[tau < infinity] = 2 sum_{k>=1} (-1)^{k+1} exp(-2 k^2 a b).
double prob_finite(const Boundary& boundary, ToleranceSpec tol = {});

// Defective CDF P[tau_{a,b} <= t]; tends to prob_finite as t -> infinity.
double cdf(const Boundary& boundary, double t, ToleranceSpec tol = {});

// cdf(t) / prob_finite, clamped to [0, 1].
double conditional_cdf(const Boundary& boundary, double t,
                       ToleranceSpec tol = {});

// Conditional density f_{a,b}(t) = Q(t) / C_{a,b}, bracketed through the
// oscillating density series past its tail index.
double density(const Boundary& boundary, double t, ToleranceSpec tol = {});

// Scaled bracket around Q(t): [lo, hi] * exp(log_scale) contains the limit.
// Taken at tail_index + extra_terms; used by envelope calibration and the
// tail verifiers, which must work far outside double range.
struct QBracket {
    double lo;
    double hi;
    double log_scale;
};
QBracket q_scaled_bracket(const Boundary& boundary, double t,
                          int extra_terms = 30);

// log of a best-estimate Q(t) (midpoint of the scaled bracket); -inf when the
// bracket midpoint is not positive.
double log_q(const Boundary& boundary, double t, int extra_terms = 30);

}  // namespace linfpt
