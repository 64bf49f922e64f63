#pragma once

#include <complex>
#include <vector>

#include "partition.hpp"

namespace betacp {

// Monomial symmetric polynomial m_mu at a point; 0 when l(mu) > dim(x).
// Direct symmetrization for small n, power-sum (set-partition) convolution
// for larger n.
std::complex<double> monomial_eval(const Partition& mu, const std::complex<double>* x, int n);

// d/dx_k m_mu(x), via the distinct-permutation expansion.
std::complex<double> monomial_deriv(const Partition& mu, const std::complex<double>* x, int n, int k);
// d^2/dx_k^2 m_mu(x).
std::complex<double> monomial_deriv2(const Partition& mu, const std::complex<double>* x, int n, int k);

// Distinct permutations of mu padded to n entries (descending start).
std::vector<std::vector<int>> distinct_arrangements(const Partition& mu, int n);

// Set-partition expansion coefficients of the augmented monomial in power sums:
// m~_mu = sum_pi  prod_B (-1)^{|B|-1} (|B|-1)!  p_{w(B)}.   Exposed for tests.
struct PowerSumTerm {
    double coeff;
    std::vector<int> powers;  // multiset of power-sum degrees
};
std::vector<PowerSumTerm> monomial_powersum_terms(const Partition& mu);

}  // namespace betacp
