#pragma once

#include <cstdint>
#include <stdexcept>

#include "linfpt/errors.hpp"

namespace linfpt {

// Symmetric linear boundary +/-(a + b t) with strictly positive coefficients.
// Degenerate cases (a = 0 or b = 0) are handled before construction by the
// sampler front end.
struct Boundary {
    double a;
    double b;

    Boundary(double a_, double b_) : a(a_), b(b_) {
        if (!(a > 0.0) || !(b > 0.0)) {
            throw std::invalid_argument("Boundary requires a > 0 and b > 0");
        }
    }
};

enum class SeriesKind { NormalizerC, DensityQ };

enum class CompareOutcome { Greater, Less };

// Tail index of the normalizer series 2 * sum_k (-1)^{k+1} exp(-2 k^2 a b):
// the oscillation ratio is exp(-2(2n+1)ab) in (0,1) for every n >= 1.
int tail_index_c();

// Tail index of the density series at time t:
// ceil(max{log(6)/(4ab), b t/(2a), 1} + 1), always >= 2.
int tail_index_q(const Boundary& boundary, double t);

// One of the two oscillating series: the normalizer C_{a,b} or the
// unnormalized density Q(t) = C_{a,b} f_{a,b}(t) at a fixed time t.
//
// Density series can be built in a scaled representation: every term is
// multiplied by exp(-log_scale()), where log_scale() absorbs the leading
// exponent -(a+bt)^2/(2t) and the 1/sqrt(2 pi t^3) prefactor. Scaled partial
// sums stay O(a + bt + 2ak) for all k, so bracketing survives at times where
// the raw values would underflow or lose all precision.
class PartialSumSeries {
  public:
    static PartialSumSeries normalizer(const Boundary& boundary);
    static PartialSumSeries density_q(const Boundary& boundary, double t);
    static PartialSumSeries density_q_scaled(const Boundary& boundary, double t);

    SeriesKind kind() const { return kind_; }
    const Boundary& boundary() const { return boundary_; }
    int tail_index() const { return tail_index_; }

    // log of the factored-out scale; 0 for unscaled series.
    double log_scale() const { return log_scale_; }

    // Term added when going from partial(k-1) to partial(k), k >= 1.
    double term(int k) const;

    // partial(0): 0 for the normalizer, the leading L(t) piece for DensityQ.
    double leading() const;

    // n-term partial sum, computed with compensated accumulation.
    double partial(int n) const;

  private:
    PartialSumSeries(SeriesKind kind, const Boundary& boundary, double t,
                     bool scaled);

    SeriesKind kind_;
    Boundary boundary_;
    double t_ = 0.0;
    int tail_index_ = 1;
    double log_scale_ = 0.0;
    double prefactor_ = 1.0;  // applied to every density term (1 when scaled)
};

struct DecideOptions {
    // Bracket width below resolution_floor * max(1, |s|) without a decision
    // raises UnresolvedComparison (or maps to Less when unresolved_as_less).
    double resolution_floor = 0x1p-40;
    bool unresolved_as_less = false;
    int max_terms = 200000;
};

struct DecideResult {
    CompareOutcome outcome;
    int terms_used = 0;
    bool unresolved_mapped = false;
};

// Finite-time comparison of the series limit S against the threshold s.
// Starting at k = tail_index, consecutive partial sums bracket the limit:
// Greater once min(S_k, S_{k+1}) > s, Less once max(S_k, S_{k+1}) < s.
DecideResult decide_compare_detail(const PartialSumSeries& series, double s,
                                   const DecideOptions& opts = {});
CompareOutcome decide_compare(const PartialSumSeries& series, double s);

// (S_{n+1} - S_n) / (S_n - S_{n-1}); in (-1, 0) for n >= tail_index.
double oscillation_ratio(const PartialSumSeries& series, int n);

// Spec-level free functions over the two series.
double c_partial(const Boundary& boundary, int n);
double q_partial(const Boundary& boundary, double t, int n);

}  // namespace linfpt
