#pragma once

#include <complex>
#include <limits>
#include <string>

namespace betacp {

using Cd = std::complex<double>;

enum class EnsembleKind { Hermite, Laguerre, Jacobi };

// A constant carried in log form; factors like e^{mN ln N} overflow doubles
// near N ~ 150 otherwise.  The imaginary part is the term-wise accumulated
// principal-branch phase (not reduced mod 2pi).
struct ScalingCoefficient {
    Cd log_value{};

    Cd value() const {
        if (log_value.real() > 700.0) return {std::numeric_limits<double>::infinity(), 0.0};
        return std::exp(log_value);
    }
};

// Selberg's integral S_N(l1, l2, l3).
ScalingCoefficient selberg_S(int N, double l1, double l2, double l3);

// Laguerre and Gaussian normalizations.
ScalingCoefficient laguerre_W(double l1, double beta, int N);
ScalingCoefficient gaussian_G(double beta, int N);

// Mehta-type Gaussian Vandermonde integral constant.
ScalingCoefficient gamma_beta_n(double beta, int n);

// Morris normalization constant M_n(a, b, alpha).
ScalingCoefficient morris_M(int n, double a, double b, double alpha);

// Soft-edge coefficient (Hermite/Laguerre only).
ScalingCoefficient coefficient_Phi(EnsembleKind kind, int N, int n, double beta, double lambda1);

// Even bulk coefficient, n = 2m.
ScalingCoefficient coefficient_Psi_even(EnsembleKind kind, int N, int m, double beta, double rho,
                                        double lambda1, double lambda2);

// Odd bulk coefficient, n = 2m-1, shift index l in {0, 1}.
ScalingCoefficient coefficient_Psi_odd(EnsembleKind kind, int N, int m, int l, double beta,
                                       double rho, double u, double lambda1, double lambda2);

// Hard-edge coefficient (Laguerre/Jacobi only).
ScalingCoefficient coefficient_xi(EnsembleKind kind, int N, int n, double beta, double lambda1,
                                  double lambda2);

// Universal correlation coefficients.
ScalingCoefficient coefficient_a_k(double beta, int k);
ScalingCoefficient coefficient_b_k(double beta, int k);
ScalingCoefficient coefficient_gamma_m(double betap, int m);

// Large-N equivalent of G_{beta,N}/G_{beta,k+N}.  The paper's display misses
// a factor pi^{-k/2}; this returns the corrected constant (ratio -> 1).
ScalingCoefficient asymptotic_G_ratio(double beta, int N, int k);

// log Gamma for nonzero non-pole real x (log|Gamma| + i*pi*(sign flips)).
Cd lgamma_signed(double x);

}  // namespace betacp
