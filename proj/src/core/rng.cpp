#include "rng.hpp"

#include <cmath>

#include "errors.hpp"

namespace betacp {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    state_ = mix64(seed ^ mix64(stream * 0xD2B74407B1CE6E93ULL + 0x8BB84B93962EACC9ULL));
}

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    // 53 random bits in (0,1)
    return (double(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double Rng::normal() {
    if (have_cached_normal_) {
        have_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(th);
    have_cached_normal_ = true;
    return r * std::cos(th);
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) throw domain_error("rng", "gamma shape must be positive");
    if (shape < 1.0) {
        // boost: G(a) = G(a+1) U^{1/a}
        double u = uniform();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double Rng::chi(double dof) { return std::sqrt(2.0 * gamma(dof / 2.0)); }

double Rng::beta(double a, double b) {
    double x = gamma(a), y = gamma(b);
    return x / (x + y);
}

}  // namespace betacp
