#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "partition.hpp"

namespace betacp {

using Cd = std::complex<double>;

enum class Prec { Auto, Dbl, DblDbl, Big };

struct TruncationPolicy {
    int max_weight = 200;
    double rel_tol = 1e-12;
    bool require_convergence = true;
    Prec precision = Prec::Auto;
    int big_bits = 256;
};

struct HyperSeriesSpec {
    double alpha = 1.0;  // +infinity allowed (std::numeric_limits<double>::infinity())
    std::vector<Cd> upper;
    std::vector<Cd> lower;
    TruncationPolicy trunc;
};

struct SeriesValue {
    Cd value{};
    double last_shell = 0.0;   // magnitude of the final weight-shell contribution
    bool terminated = false;
    int weight_used = 0;
    double max_term = 0.0;     // largest single partition contribution (cancellation diagnostic)
};

// pFq^(alpha)(a; b; x1..xn), summed shell by shell over partition weight.
SeriesValue eval_pFq(const HyperSeriesSpec& spec, const Cd* x, int n);

// Two-set series pFq^(alpha)(a; b; x; y) with the P(x)P(y)/P(1^n) summand.
SeriesValue eval_two_set(const HyperSeriesSpec& spec, const Cd* x, const Cd* y, int n);

// E_j^(alpha)(x) = 0F0^(alpha)(x; (-1)^j, 1^{n-j}).
Cd eval_E(int j, double alpha, const Cd* x, int n, const TruncationPolicy& pol = {});

// RHS of the a^k b^{n-k} reduction: e^{b p1(x)} 1F1^(alpha)(k/alpha; n/alpha; (a-b)x).
SeriesValue reduce_0F0(const Cd* x, int n, Cd a, Cd b, int k, double alpha,
                       const TruncationPolicy& pol = {});

}  // namespace betacp
