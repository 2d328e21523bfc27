#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "linfpt/distribution.hpp"
#include "linfpt/sampler.hpp"
#include "linfpt/validation.hpp"

namespace py = pybind11;
using namespace linfpt;

PYBIND11_MODULE(_linfpt, m) {
    m.doc() = "Exact first-passage-time sampling for the symmetric linear "
              "boundary +/-(a+bt)";

    m.def(
        "prob_finite",
        [](double a, double b, double tol) {
            return prob_finite(Boundary(a, b), ToleranceSpec(tol));
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-12);

    m.def(
        "cdf",
        [](double a, double b, double t, double tol) {
            return cdf(Boundary(a, b), t, ToleranceSpec(tol));
        },
        py::arg("a"), py::arg("b"), py::arg("t"), py::arg("tol") = 1e-12);

    m.def(
        "conditional_cdf",
        [](double a, double b, double t, double tol) {
            return conditional_cdf(Boundary(a, b), t, ToleranceSpec(tol));
        },
        py::arg("a"), py::arg("b"), py::arg("t"), py::arg("tol") = 1e-12);

    m.def(
        "density",
        [](double a, double b, double t, double tol) {
            return density(Boundary(a, b), t, ToleranceSpec(tol));
        },
        py::arg("a"), py::arg("b"), py::arg("t"), py::arg("tol") = 1e-12);

    m.def(
        "tail_index_q",
        [](double a, double b, double t) {
            return tail_index_q(Boundary(a, b), t);
        },
        py::arg("a"), py::arg("b"), py::arg("t"));

    m.def(
        "sample",
        [](double a, double b, std::uint64_t n, std::uint64_t seed,
           double alpha) {
            FirstPassageSampler sampler(a, b, alpha);
            RandomSource rng(seed);
            SamplerStats stats;
            std::vector<double> times;
            times.reserve(n);
            for (std::uint64_t i = 0; i < n; ++i) {
                const FptOutcome o = sampler.draw(rng, stats);
                times.push_back(o.finite
                                    ? o.time
                                    : std::numeric_limits<double>::infinity());
            }
            py::dict summary;
            summary["proposals"] = stats.proposals;
            summary["accepted"] = stats.accepted;
            summary["max_terms_used"] = stats.max_terms_used;
            summary["unresolved_events"] = stats.unresolved_events;
            return py::make_tuple(times, summary);
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("seed"),
        py::arg("alpha") = 0.5,
        "Draw n first-passage times; the atom at infinity comes back as "
        "float('inf'). Returns (times, stats).");

    m.def(
        "calibrate_envelope",
        [](double a, double b, double alpha) {
            Boundary boundary(a, b);
            const EnvelopeConfig env = calibrate_envelope(boundary, alpha);
            py::dict d;
            d["alpha"] = env.alpha;
            d["rate"] = env.rate;
            d["log_m_prime"] = env.log_m_prime;
            d["predicted_acceptance"] =
                prob_finite(boundary) / std::exp(env.log_m_prime);
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("alpha") = 0.5);

    m.def(
        "verify_envelope",
        [](double a, double b, double alpha, std::uint64_t grid) {
            Boundary boundary(a, b);
            return verify_envelope(boundary,
                                   calibrate_envelope(boundary, alpha), grid);
        },
        py::arg("a"), py::arg("b"), py::arg("alpha") = 0.5,
        py::arg("grid") = 4096);

    m.def(
        "verify_left_tail",
        [](double a, double b, int n) {
            return verify_left_tail(Boundary(a, b), n);
        },
        py::arg("a"), py::arg("b"), py::arg("n") = 3);

    m.def(
        "verify_right_tail",
        [](double a, double b) { return verify_right_tail(Boundary(a, b)); },
        py::arg("a"), py::arg("b"));

    m.def(
        "ks_statistic",
        [](std::vector<double> samples, double a, double b) {
            std::sort(samples.begin(), samples.end());
            Boundary boundary(a, b);
            return ks_statistic(samples, [&](double t) {
                return conditional_cdf(boundary, t);
            });
        },
        py::arg("samples"), py::arg("a"), py::arg("b"),
        "KS distance of finite samples against the conditional CDF.");

    py::register_exception<UnsupportedBoundary>(m, "UnsupportedBoundaryError");
    py::register_exception<UnresolvedComparison>(m,
                                                 "UnresolvedComparisonError");
    py::register_exception<CalibrationFailure>(m, "CalibrationFailureError");
}
