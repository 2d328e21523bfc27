#include "linfpt/random_source.hpp"

#include <cmath>
#include <stdexcept>

namespace linfpt {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : engine_(seed) {}

RandomSource RandomSource::for_worker(std::uint64_t seed,
                                      std::uint64_t worker) {
    return RandomSource(splitmix64(seed) ^ splitmix64(~worker));
}

double RandomSource::uniform() {
    for (;;) {
        const double u =
            static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;
    }
}

double RandomSource::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    for (;;) {
        const double u = 2.0 * uniform() - 1.0;
        const double v = 2.0 * uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            const double m = std::sqrt(-2.0 * std::log(s) / s);
            spare_ = v * m;
            have_spare_ = true;
            return u * m;
        }
    }
}

double RandomSource::gamma(double shape, double rate) {
    if (!(shape >= 0.5) || !(rate > 0.0)) {
        throw std::invalid_argument("gamma requires shape >= 1/2 and rate > 0");
    }
    if (shape < 1.0) {
        // Boost: G(shape) = G(shape + 1) * U^{1/shape}.
        const double g = gamma(shape + 1.0, rate);
        return g * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v / rate;
        }
    }
}

}  // namespace linfpt
