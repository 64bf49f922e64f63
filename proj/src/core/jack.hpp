#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "partition.hpp"

namespace betacp {

// Monic Jack polynomial P_kappa^(alpha) in the monomial basis.
struct JackExpansion {
    Partition kappa;
    double alpha = 1.0;
    int nvars = 0;  // basis truncated to l(mu) <= nvars
    // (mu, c_mu) sorted by the partition order; leading term c_kappa = 1.
    std::vector<std::pair<Partition, std::complex<double>>> coeffs;

    std::complex<double> eval(const std::complex<double>* x, int n) const;
};

// Action of D2 - (2/alpha)(n-1)E1 on m_mu, expanded back in the monomial
// basis.  Each target coefficient is a_part + (2/alpha) * b_part with integer
// a_part, b_part (exact in double).
struct MonomialOpTerm {
    Partition target;
    double a_part = 0.0;
    double b_part = 0.0;
};
std::vector<MonomialOpTerm> lb_operator_on_monomial(const Partition& mu, int nvars);

// Eigenvalue of the defining operator on P_kappa (independent of nvars).
double jack_eigenvalue(const Partition& kappa, double alpha);

struct EigenData {
    Partition kappa;
    double alpha;
    double epsilon;
};

// Construct (and cache) the expansion; throws "vanishing polynomial" when
// l(kappa) > nvars and "degenerate parameter" on eigenvalue collisions.
std::shared_ptr<const JackExpansion> jack_expansion(const Partition& kappa, double alpha, int nvars);

std::complex<double> jack_eval(const JackExpansion& e, const std::complex<double>* x, int n);

// Principal specialization P_kappa(1^n); 0 when l(kappa) > n.
double jack_at_ones(const Partition& kappa, double alpha, int n);

}  // namespace betacp
