#pragma once

namespace betacp {

// Classical Airy functions of the first and second kind and first derivatives.
// Maclaurin series in double-double up to |x| ~ 9, asymptotic expansions beyond.
double airy_ai(double x);
double airy_ai_prime(double x);
double airy_bi(double x);
double airy_bi_prime(double x);

// Bessel J_nu by power series; x >= 0, nu > -1.  Accurate for moderate x.
double bessel_j(double nu, double x);

}  // namespace betacp
