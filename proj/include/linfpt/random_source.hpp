#pragma once

#include <cstdint>
#include <random>

namespace linfpt {

// Seedable stream of uniforms, normals and gamma variates. Identical seeds
// give call-for-call identical sequences; gamma generation is rejection
// based, so every variate is exact in distribution.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed);

    // Per-worker stream derived from (seed, worker_index); independent
    // streams for parallel batches, merged deterministically by index.
    static RandomSource for_worker(std::uint64_t seed, std::uint64_t worker);

    // Uniform on the open interval (0, 1).
    double uniform();

    // Standard normal (Marsaglia polar method).
    double normal();

    // Gamma(shape, rate), shape >= 1/2 (Marsaglia-Tsang, with the power
    // boost for shape < 1).
    double gamma(double shape, double rate);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace linfpt
