#pragma once

#include <cstdint>

namespace betacp {

// Counter-based splittable stream: each (seed, stream_index) pair yields an
// independent deterministic sequence, independent of thread scheduling.
class Rng {
  public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform();  // (0, 1)
    double normal();
    double gamma(double shape);  // scale 1
    double chi(double dof);      // sqrt of chi-square
    double beta(double a, double b);

  private:
    std::uint64_t state_;
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace betacp
