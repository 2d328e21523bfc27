#include "linfpt/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace linfpt {

namespace {

// Neumaier-compensated accumulator; the bracket logic depends on the sign of
// consecutive partial-sum differences, so plain summation is not enough.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace

int tail_index_c() { return 1; }

int tail_index_q(const Boundary& boundary, double t) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("tail_index_q requires t > 0");
    }
    const double a = boundary.a;
    const double b = boundary.b;
    const double n =
        std::max({std::log(6.0) / (4.0 * a * b), b * t / (2.0 * a), 1.0}) + 1.0;
    return static_cast<int>(std::ceil(n));
}

PartialSumSeries::PartialSumSeries(SeriesKind kind, const Boundary& boundary,
                                   double t, bool scaled)
    : kind_(kind), boundary_(boundary), t_(t) {
    if (kind_ == SeriesKind::NormalizerC) {
        tail_index_ = tail_index_c();
        return;
    }
    if (!(t > 0.0)) {
        throw std::invalid_argument("DensityQ series requires t > 0");
    }
    tail_index_ = tail_index_q(boundary, t);
    const double a = boundary.a;
    const double b = boundary.b;
    const double s = a + b * t;
    const double log_full =
        -s * s / (2.0 * t) - 0.5 * std::log(2.0 * M_PI * t * t * t);
    if (scaled) {
        log_scale_ = log_full;
        prefactor_ = 1.0;
    } else {
        log_scale_ = 0.0;
        prefactor_ = std::exp(log_full);
    }
}

PartialSumSeries PartialSumSeries::normalizer(const Boundary& boundary) {
    return PartialSumSeries(SeriesKind::NormalizerC, boundary, 0.0, false);
}

PartialSumSeries PartialSumSeries::density_q(const Boundary& boundary,
                                             double t) {
    return PartialSumSeries(SeriesKind::DensityQ, boundary, t, false);
}

PartialSumSeries PartialSumSeries::density_q_scaled(const Boundary& boundary,
                                                    double t) {
    return PartialSumSeries(SeriesKind::DensityQ, boundary, t, true);
}

double PartialSumSeries::leading() const {
    if (kind_ == SeriesKind::NormalizerC) return 0.0;
    return (boundary_.a - boundary_.b * t_) * prefactor_;
}

double PartialSumSeries::term(int k) const {
    if (k < 1) throw std::invalid_argument("term index must be >= 1");
    const double a = boundary_.a;
    const double b = boundary_.b;
    const double dk = static_cast<double>(k);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;

    if (kind_ == SeriesKind::NormalizerC) {
        return sign * 2.0 * std::exp(-2.0 * dk * dk * a * b);
    }

    // k-th correction term relative to the factored scale. With
    // s = a + bt, the two exponents collapse to
    //   A = -2ak*s/t - 2a^2k^2/t - 2k^2ab   and
    //   B = +2ak*s/t - 2a^2k^2/t - 2k^2ab,
    // both <= 0, so scaled terms never overflow and no precision is lost to
    // forming huge intermediate squares.
    const double t = t_;
    const double s = a + b * t;
    const double common = -2.0 * a * a * dk * dk / t - 2.0 * dk * dk * a * b;
    const double cross = 2.0 * a * dk * s / t;
    const double expA = std::exp(common - cross);
    const double expB = std::exp(common + cross);
    const double value =
        (-a + b * t - 2.0 * a * dk) * expA - (a - b * t - 2.0 * a * dk) * expB;
    return sign * value * prefactor_;
}

double PartialSumSeries::partial(int n) const {
    if (n < 0) throw std::invalid_argument("partial sum index must be >= 0");
    CompensatedSum acc;
    acc.add(leading());
    for (int k = 1; k <= n; ++k) {
        acc.add(term(k));
    }
    return acc.value();
}

DecideResult decide_compare_detail(const PartialSumSeries& series, double s,
                                   const DecideOptions& opts) {
    const int k0 = series.tail_index();
    CompensatedSum acc;
    acc.add(series.leading());
    for (int k = 1; k <= k0; ++k) {
        acc.add(series.term(k));
    }
    double sk = acc.value();
    acc.add(series.term(k0 + 1));
    double sk1 = acc.value();

    DecideResult res;
    for (int k = k0;; ++k) {
        res.terms_used = k + 1;
        const double lo = std::min(sk, sk1);
        const double hi = std::max(sk, sk1);
        if (lo > s) {
            res.outcome = CompareOutcome::Greater;
            return res;
        }
        if (hi < s) {
            res.outcome = CompareOutcome::Less;
            return res;
        }
        const double width = hi - lo;
        if (width < opts.resolution_floor * std::max(1.0, std::abs(s)) ||
            k - k0 >= opts.max_terms) {
            if (opts.unresolved_as_less) {
                res.outcome = CompareOutcome::Less;
                res.unresolved_mapped = true;
                return res;
            }
            throw UnresolvedComparison(
                "series bracket hit the resolution floor without resolving");
        }
        sk = sk1;
        acc.add(series.term(k + 2));
        sk1 = acc.value();
    }
}

CompareOutcome decide_compare(const PartialSumSeries& series, double s) {
    return decide_compare_detail(series, s).outcome;
}

double oscillation_ratio(const PartialSumSeries& series, int n) {
    if (n < 1) throw std::invalid_argument("oscillation_ratio requires n >= 1");
    const double d_prev = series.partial(n) - series.partial(n - 1);
    const double d_next = series.partial(n + 1) - series.partial(n);
    if (d_prev == 0.0) {
        throw DegenerateDifference(
            "consecutive partial-sum difference underflowed to zero");
    }
    return d_next / d_prev;
}

double c_partial(const Boundary& boundary, int n) {
    return PartialSumSeries::normalizer(boundary).partial(n);
}

double q_partial(const Boundary& boundary, double t, int n) {
    return PartialSumSeries::density_q(boundary, t).partial(n);
}

}  // namespace linfpt
