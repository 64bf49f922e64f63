#include "constants.hpp"

#include <cmath>

#include "errors.hpp"

namespace betacp {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpos_int(double x) {
    return x <= 0.5 && std::abs(x - std::round(x)) < 1e-12 * (1.0 + std::abs(x));
}

// principal log of a real number
Cd log_real(double x) {
    if (x > 0.0) return {std::log(x), 0.0};
    if (x < 0.0) return {std::log(-x), kPi};
    throw domain_error("constants", "log of zero factor");
}

struct LogProd {
    Cd acc{};

    LogProd& gamma(double x) {
        if (is_nonpos_int(x)) throw domain_error("constants", "gamma pole at " + std::to_string(x));
        acc += lgamma_signed(x);
        return *this;
    }
    LogProd& gamma_div(double x) {
        if (is_nonpos_int(x)) throw domain_error("constants", "gamma pole at " + std::to_string(x));
        acc -= lgamma_signed(x);
        return *this;
    }
    LogProd& pow_real(double base, double expo) {
        acc += expo * log_real(base);
        return *this;
    }
    LogProd& factor(double x) {
        acc += log_real(x);
        return *this;
    }
    LogProd& raw(Cd logterm) {
        acc += logterm;
        return *this;
    }
    ScalingCoefficient done() const { return {acc}; }
};

double log_binomial(int n, int k) { return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0); }

}  // namespace

Cd lgamma_signed(double x) {
    if (is_nonpos_int(x)) throw domain_error("constants", "gamma pole at " + std::to_string(x));
    if (x > 0.0) return {std::lgamma(x), 0.0};
    // Gamma(x) < 0 exactly when floor(x) is odd (x < 0, non-integer)
    double fl = std::floor(x);
    bool neg = std::fmod(std::fmod(fl, 2.0) + 2.0, 2.0) > 0.5;
    return {std::lgamma(x), neg ? kPi : 0.0};
}

ScalingCoefficient selberg_S(int N, double l1, double l2, double l3) {
    if (N < 1) throw invalid_arg("constants", "N >= 1");
    if (!(l1 > -1.0) || !(l2 > -1.0) || !(l3 > 0.0))
        throw domain_error("constants", "selberg_S requires l1, l2 > -1 and l3 > 0");
    LogProd p;
    for (int j = 0; j < N; ++j) {
        p.gamma(1 + l3 + j * l3).gamma(1 + l1 + j * l3).gamma(1 + l2 + j * l3);
        p.gamma_div(1 + l3).gamma_div(2 + l1 + l2 + (N + j - 1) * l3);
    }
    return p.done();
}

ScalingCoefficient laguerre_W(double l1, double beta, int N) {
    if (!(l1 > -1.0) || !(beta > 0.0)) throw domain_error("constants", "laguerre_W domain");
    LogProd p;
    p.pow_real(2.0 / beta, (1 + l1) * N + beta * N * (N - 1) / 2.0);
    for (int j = 0; j < N; ++j)
        p.gamma(1 + beta / 2 + j * beta / 2).gamma(1 + l1 + j * beta / 2).gamma_div(1 + beta / 2);
    return p.done();
}

ScalingCoefficient gaussian_G(double beta, int N) {
    if (!(beta > 0.0)) throw domain_error("constants", "beta must be positive");
    LogProd p;
    p.pow_real(beta, -N / 2.0 - beta * N * (N - 1) / 4.0);
    p.pow_real(2 * kPi, N / 2.0);
    for (int j = 0; j < N; ++j) p.gamma(1 + beta / 2 + j * beta / 2).gamma_div(1 + beta / 2);
    return p.done();
}

ScalingCoefficient gamma_beta_n(double beta, int n) {
    if (!(beta > 0.0)) throw domain_error("constants", "beta must be positive");
    LogProd p;
    p.pow_real(2 * kPi, n / 2.0);
    for (int j = 1; j <= n; ++j) p.gamma(1 + j * beta / 2).gamma_div(1 + beta / 2);
    return p.done();
}

ScalingCoefficient morris_M(int n, double a, double b, double alpha) {
    LogProd p;
    for (int j = 0; j < n; ++j) {
        p.gamma(1 + alpha + j * alpha).gamma(1 + a + b + j * alpha);
        p.gamma_div(1 + alpha).gamma_div(1 + a + j * alpha).gamma_div(1 + b + j * alpha);
    }
    return p.done();
}

ScalingCoefficient coefficient_Phi(EnsembleKind kind, int N, int n, double beta, double lambda1) {
    double bp = 4.0 / beta;
    LogProd p;
    switch (kind) {
        case EnsembleKind::Hermite:
            p.pow_real(N, bp * n * (n - 1) / 12.0 + n / 6.0);
            p.raw(Cd(-n * N * (1 + std::log(2.0) - std::log(double(N))) / 2.0, kPi * n * N));
            return p.done();
        case EnsembleKind::Laguerre:
            p.pow_real(2.0, -bp * n * (n - 1) / 6.0 - bp * n / 2.0 + 2.0 * n / 3.0);
            p.pow_real(N, bp * n * (n - 1) / 12.0 + bp * n * lambda1 / 4.0 + n / 6.0);
            p.raw(Cd(-n * N * (1 - std::log(double(N))), kPi * n * N));
            return p.done();
        default:
            throw domain_error("constants", "coefficient undefined for ensemble: Phi (Jacobi)");
    }
}

ScalingCoefficient coefficient_Psi_even(EnsembleKind kind, int N, int m, double beta, double rho,
                                        double lambda1, double lambda2) {
    double bp = 4.0 / beta;
    LogProd p;
    switch (kind) {
        case EnsembleKind::Hermite:
            p.pow_real(kPi * rho, bp * m * (m + 1) / 2.0 - m);
            p.pow_real(N, bp * m * m / 2.0);
            p.raw(Cd(-m * N * (1 + std::log(2.0) - std::log(double(N))), 0.0));
            return p.done();
        case EnsembleKind::Laguerre:
            p.pow_real(kPi * rho / 2.0, bp * m * (m + 1) / 2.0 - m);
            p.pow_real(N, bp * m * (m + lambda1) / 2.0);
            p.raw(Cd(-2.0 * m * N * (1 - std::log(double(N))), 0.0));
            return p.done();
        case EnsembleKind::Jacobi:
            p.pow_real(kPi * rho, bp * m * (m + 1) / 2.0 - m);
            p.pow_real(N, bp * m * m / 2.0);
            p.pow_real(2.0, -bp * m * m / 2.0 - bp * m * (lambda1 + lambda2 + 1) + 2.0 * m * (1 - 2 * N));
            return p.done();
    }
    throw domain_error("constants", "bad ensemble");
}

ScalingCoefficient coefficient_Psi_odd(EnsembleKind kind, int N, int m, int l, double beta,
                                       double rho, double u, double lambda1, double lambda2) {
    if (l != 0 && l != 1) throw invalid_arg("constants", "l in {0,1}");
    double bp = 4.0 / beta;
    int n = 2 * m - 1;
    LogProd p;
    p.raw(Cd(log_binomial(2 * m - 1, m), 0.0));
    // Gamma_{bp,m-1} Gamma_{bp,m} / Gamma_{bp,2m-1}
    p.raw(gamma_beta_n(bp, m - 1).log_value + gamma_beta_n(bp, m).log_value -
          gamma_beta_n(bp, 2 * m - 1).log_value);
    switch (kind) {
        case EnsembleKind::Hermite:
            p.pow_real(kPi * rho, bp * (m * m - 1) / 2.0 - (2.0 * m - 1) / 2.0);
            p.pow_real(N, bp * m * (m - 1) / 2.0);
            p.raw(Cd(-(2 * m - 1) * N * (1 + std::log(2.0) - std::log(double(N))) / 2.0, 0.0));
            p.pow_real(std::sqrt(N / 2.0), -double(2 * m - 1) * l);
            p.factor(2.0).pow_real(kPi * rho / 2.0, 0.5).raw(Cd(0.0, kPi / 2.0));  // 2 i sqrt(pi rho/2)
            return p.done();
        case EnsembleKind::Laguerre:
            p.pow_real(kPi * rho / 2.0, bp * (m * m - 1) / 2.0 - m + 1.0);
            p.pow_real(2.0, 0.5);
            p.pow_real(2.0 * std::sqrt(u), -bp / 2.0 + 1.0);
            p.pow_real(N, bp * m * (m - 1) / 2.0 + bp * (2 * m - 1) * lambda1 / 4.0);
            p.raw(Cd(-(2 * m - 1) * N * (1 - std::log(double(N))), kPi * (2 * m - 1) * N));
            // (-N)^{-(2m-1) l}, principal branch
            p.raw(-double((2 * m - 1) * l) * Cd(std::log(double(N)), kPi));
            return p.done();
        case EnsembleKind::Jacobi:
            p.pow_real(kPi * rho, bp * (m - 1) * (m - 1) / 2.0 + (bp - 2 * m + 1) / 2.0);
            p.pow_real(2.0, 0.5);
            p.pow_real(2.0 * std::sqrt(u), -bp / 2.0 + 1.0);
            p.pow_real(N, bp * m * (m - 1) / 2.0);
            p.raw(Cd(0.0, -kPi / 2.0));                  // i^{-1}
            p.raw(Cd(0.0, kPi * double(n) * (N - 1)));   // (-1)^{n(N-1)}
            p.pow_real(2.0, -bp * m * (m + 1) / 2.0 - bp * (2 * m - 1) * (lambda1 + lambda2) / 2.0 +
                                (2 * m - 1) * (1.0 - 2 * N + 2 * l) + 1.0);
            p.pow_real(1.0 - u, n * l / 2.0);
            p.pow_real(u, 0.25);
            return p.done();
    }
    throw domain_error("constants", "bad ensemble");
}

ScalingCoefficient coefficient_xi(EnsembleKind kind, int N, int n, double beta, double lambda1,
                                  double lambda2) {
    switch (kind) {
        case EnsembleKind::Laguerre: {
            LogProd p;
            p.raw(laguerre_W(lambda1 + n, beta, N).log_value - laguerre_W(lambda1, beta, N).log_value);
            return p.done();
        }
        case EnsembleKind::Jacobi: {
            LogProd p;
            p.raw(selberg_S(N, lambda1 + n, lambda2, beta / 2).log_value -
                  selberg_S(N, lambda1, lambda2, beta / 2).log_value);
            return p.done();
        }
        default:
            throw domain_error("constants", "coefficient undefined for ensemble: xi (Hermite)");
    }
}

ScalingCoefficient coefficient_a_k(double beta, int k) {
    LogProd p;
    p.pow_real(beta / 2.0, (beta * k + 1.0) * k);
    p.raw(double(k) * lgamma_signed(1 + beta / 2));
    for (int j = 1; j <= 2 * k; ++j) {
        p.raw((beta / 2.0) * lgamma_signed(1 + 2.0 / beta));
        p.gamma_div(1 + beta * j / 2.0);
    }
    return p.done();
}

ScalingCoefficient coefficient_b_k(double beta, int k) {
    LogProd p;
    p.pow_real(beta / 2.0, beta * k * (k - 1) / 2.0);
    p.raw(double(k) * lgamma_signed(1 + beta / 2));
    for (int j = 0; j < k; ++j) p.gamma(1 + beta * j / 2.0).gamma_div(1 + beta * (k + j) / 2.0);
    return p.done();
}

ScalingCoefficient coefficient_gamma_m(double betap, int m) {
    LogProd p;
    p.raw(Cd(log_binomial(2 * m, m), 0.0));
    for (int j = 1; j <= m; ++j) p.gamma(1 + betap * j / 2.0).gamma_div(1 + betap * (m + j) / 2.0);
    return p.done();
}

ScalingCoefficient asymptotic_G_ratio(double beta, int N, int k) {
    LogProd p;
    p.pow_real(2 * kPi, -k / 2.0);
    p.pow_real(2.0, beta * k * (k + 1) / 4.0);
    p.pow_real(beta, -beta * k / 2.0);
    p.raw(double(k) * lgamma_signed(1 + beta / 2));
    p.pow_real(2.0 * std::exp(1.0), beta * k * N / 2.0);
    p.pow_real(N, -beta * k * N / 2.0 - beta * k * (k + 1) / 4.0 - k / 2.0);
    p.pow_real(kPi, -k / 2.0);  // correction to the printed display
    return p.done();
}

}  // namespace betacp
