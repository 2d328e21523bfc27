#include "linfpt/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace linfpt {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
constexpr int kMaxTerms = 10000;

double upper_tail(double x) { return 0.5 * std::erfc(x * kInvSqrt2); }
}  // namespace

double std_normal_integral(double lo, double hi) {
    if (lo > hi) {
        throw std::invalid_argument("std_normal_integral requires lo <= hi");
    }
    if (lo == hi) return 0.0;
    // Differences of same-side tail values avoid cancellation when both
    // limits are large, which happens as soon as k grows in Theorem-style
    // bilateral sums (limits ~ 2ak/sqrt(t)).
    if (lo >= 0.0) return upper_tail(lo) - upper_tail(hi);
    if (hi <= 0.0) return upper_tail(-hi) - upper_tail(-lo);
    return 1.0 - upper_tail(hi) - upper_tail(-lo);
}

double prob_finite(const Boundary& boundary, ToleranceSpec tol) {
    const double ab = boundary.a * boundary.b;
    double sum = 0.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const double dk = static_cast<double>(k);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        sum += sign * 2.0 * std::exp(-2.0 * dk * dk * ab);
        const double dk1 = dk + 1.0;
        if (2.0 * std::exp(-2.0 * dk1 * dk1 * ab) < tol.abs_tol) break;
    }
    return sum;
}

double cdf(const Boundary& boundary, double t, ToleranceSpec tol) {
    if (t < 0.0) throw std::invalid_argument("cdf requires t >= 0");
    if (t == 0.0) return 0.0;
    const double a = boundary.a;
    const double b = boundary.b;
    const double ab = a * b;
    const double sqt = std::sqrt(t);
    const double edge = (a + b * t) / sqt;

    // k = 0 term, then +-k pairs (which are equal by symmetry of the limits).
    double sum = std_normal_integral(-edge, edge);
    for (int k = 1; k <= kMaxTerms; ++k) {
        const double dk = static_cast<double>(k);
        const double shift = 2.0 * a * dk / sqt;
        const double ik = std_normal_integral(-edge + shift, edge + shift);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * 2.0 * std::exp(-2.0 * dk * dk * ab) * ik;
        const double dk1 = dk + 1.0;
        if (2.0 * std::exp(-2.0 * dk1 * dk1 * ab) < tol.abs_tol) break;
    }
    return std::max(0.0, 1.0 - sum);
}

double conditional_cdf(const Boundary& boundary, double t, ToleranceSpec tol) {
    const double c = prob_finite(boundary, tol);
    const double v = cdf(boundary, t, tol) / c;
    return std::clamp(v, 0.0, 1.0);
}

QBracket q_scaled_bracket(const Boundary& boundary, double t,
                          int extra_terms) {
    const auto series = PartialSumSeries::density_q_scaled(boundary, t);
    const int k = series.tail_index() + extra_terms;
    const double sk = series.partial(k);
    const double sk1 = sk + series.term(k + 1);
    return {std::min(sk, sk1), std::max(sk, sk1), series.log_scale()};
}

double log_q(const Boundary& boundary, double t, int extra_terms) {
    const QBracket br = q_scaled_bracket(boundary, t, extra_terms);
    const double mid = 0.5 * (br.lo + br.hi);
    if (!(mid > 0.0)) return -std::numeric_limits<double>::infinity();
    return br.log_scale + std::log(mid);
}

double density(const Boundary& boundary, double t, ToleranceSpec tol) {
    if (!(t > 0.0)) throw std::invalid_argument("density requires t > 0");
    const double c = prob_finite(boundary, tol);
    const auto series = PartialSumSeries::density_q_scaled(boundary, t);
    const double scale = std::exp(series.log_scale());

    double sk = series.partial(series.tail_index());
    double sk1 = sk + series.term(series.tail_index() + 1);
    for (int k = series.tail_index();; ++k) {
        const double width = std::abs(sk1 - sk) * scale;
        if (width <= tol.abs_tol * c || k - series.tail_index() > kMaxTerms ||
            width == 0.0) {
            break;
        }
        sk = sk1;
        sk1 += series.term(k + 2);
    }
    double f = 0.5 * (sk + sk1) * scale / c;
    if (f < 0.0 && std::abs(f) <= tol.abs_tol) f = 0.0;
    return f;
}

}  // namespace linfpt
