#include "hyper.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "jack.hpp"
#include "scalars.hpp"

namespace betacp {

namespace {

constexpr double kIntTol = 1e-9;

bool near_nonpos_int(Cd v, long* out) {
    if (std::abs(v.imag()) > kIntTol) return false;
    double r = std::round(v.real());
    if (std::abs(v.real() - r) > kIntTol * (1.0 + std::abs(v.real()))) return false;
    if (r > 0.5) return false;
    *out = static_cast<long>(r);
    return true;
}

// per-row part bounds induced by an upper parameter: kappa_i <= bound[i-1]
struct RowBounds {
    std::vector<long> bound;  // size n, LONG_MAX when unconstrained
};

RowBounds detect_bounds(const std::vector<Cd>& upper, double alpha, int n) {
    RowBounds rb;
    rb.bound.assign(n, std::numeric_limits<long>::max());
    for (const Cd& a : upper) {
        for (int i = 1; i <= n; ++i) {
            long m;
            if (near_nonpos_int(a - double(i - 1) / alpha, &m))
                rb.bound[i - 1] = std::min(rb.bound[i - 1], -m);
        }
    }
    return rb;
}

bool admissible(const Partition& k, const RowBounds& rb) {
    for (int i = 0; i < k.length(); ++i)
        if (k.part(i) > rb.bound[i]) return false;
    return true;
}

template <class R>
Cx<R> to_cx(Cd z) {
    return Cx<R>(R(z.real()), R(z.imag()));
}

template <class R>
Cx<R> cpow_int(Cx<R> x, int k) {
    Cx<R> r(R(1.0));
    while (k > 0) {
        if (k & 1) r = r * x;
        x = x * x;
        k >>= 1;
    }
    return r;
}

// [u]_kappa box product in R arithmetic
template <class R>
Cx<R> poch_box(Cd u, const Partition& k, double alpha) {
    Cx<R> p(R(1.0));
    for (const auto& b : box_stats(k))
        p = p * (to_cx<R>(u) + Cx<R>(R(double(b.coarm)) - R(double(b.coleg)) / R(alpha)));
    return p;
}

template <class R>
R hook_R(const Partition& k, double alpha) {
    R h(1.0);
    for (const auto& b : box_stats(k)) h = h * (R(1.0 + b.arm) + R(double(b.leg)) / R(alpha));
    return h;
}

template <class R>
R at_ones_R(const Partition& k, double alpha, int n) {
    R v(1.0);
    for (const auto& b : box_stats(k)) {
        v = v * (R(double(n)) + R(alpha) * R(double(b.coarm)) - R(double(b.coleg)));
        v = v / (R(alpha) * R(double(b.arm)) + R(double(b.leg) + 1.0));
    }
    return v;
}

// one-row Jack in two variables: P_(k)(x1,x2) = k!/(g)_k sum_{i+j=k} (g)_i (g)_j/(i! j!) x1^i x2^j,
// g = 1/alpha.  Row coefficients are built incrementally in R.
template <class R>
Cx<R> jack_two_vars(const Partition& kap, double alpha, const Cx<R>& x1, const Cx<R>& x2) {
    int k1 = kap.part(0), k2 = kap.part(1);
    int k = k1 - k2;
    Cx<R> shift = cpow_int(x1 * x2, k2);
    if (k == 0) return shift;
    R g = R(1.0) / R(alpha);
    // c_i = (g)_i / i!
    std::vector<R> c(k + 1);
    c[0] = R(1.0);
    for (int i = 1; i <= k; ++i) c[i] = c[i - 1] * (g + R(double(i - 1))) / R(double(i));
    // k!/(g)_k
    R norm(1.0);
    for (int i = 1; i <= k; ++i) norm = norm * R(double(i)) / (g + R(double(i - 1)));
    Cx<R> s(R(0.0));
    for (int i = 0; i <= k; ++i) s += Cx<R>(c[i] * c[k - i]) * cpow_int(x1, i) * cpow_int(x2, k - i);
    return shift * s * Cx<R>(norm);
}

template <class R>
Cx<R> monomial_R(const Partition& mu, const Cx<R>* x, int n) {
    if (mu.length() > n) return Cx<R>(R(0.0));
    Cx<R> tot(R(0.0));
    for (const auto& v : distinct_arrangements(mu, n)) {
        Cx<R> t(R(1.0));
        for (int i = 0; i < n; ++i)
            if (v[i] > 0) t = t * cpow_int(x[i], v[i]);
        tot += t;
    }
    return tot;
}

template <class R>
Cx<R> jack_R(const Partition& kap, double alpha, const Cx<R>* x, int n) {
    if (kap.length() > n) return Cx<R>(R(0.0));
    if (kap.empty()) return Cx<R>(R(1.0));
    if (n == 1) return cpow_int(x[0], kap.part(0));
    if (n == 2) return jack_two_vars<R>(kap, alpha, x[0], x[1]);
    auto exp = jack_expansion(kap, alpha, n);
    Cx<R> tot(R(0.0));
    for (const auto& [mu, c] : exp->coeffs) {
        if (mu.length() > n) continue;
        tot += to_cx<R>(c) * monomial_R(mu, x, n);
    }
    return tot;
}

struct RawResult {
    Cd value;
    double last_shell = 0.0;
    double max_term = 0.0;
    bool terminated = false;
    int weight_used = 0;
    bool converged = false;
};

template <class R>
RawResult series_core(double alpha, const std::vector<Cd>& upper, const std::vector<Cd>& lower,
                      const Cd* x, const Cd* y, int n, const TruncationPolicy& pol, bool two_set) {
    RowBounds rb = detect_bounds(upper, alpha, n);
    bool terminating = rb.bound[0] != std::numeric_limits<long>::max();
    long tmax = 0;
    if (terminating) {
        for (int i = 0; i < n; ++i) tmax += std::min(rb.bound[i], rb.bound[0]);
        if (tmax > 200000) throw invalid_arg("hyper", "terminating box too large");
    }

    std::vector<Cx<R>> xr(n), yr(two_set ? n : 0);
    for (int i = 0; i < n; ++i) xr[i] = to_cx<R>(x[i]);
    if (two_set)
        for (int i = 0; i < n; ++i) yr[i] = to_cx<R>(y[i]);

    Cx<R> total(R(0.0));
    Cx<R> comp(R(0.0));  // Neumaier compensation, used for the double tier
    auto add_comp = [&](const Cx<R>& t) {
        if constexpr (std::is_same_v<R, double>) {
            auto piece = [&](double& sum, double& c, double v) {
                double s = sum + v;
                if (std::fabs(sum) >= std::fabs(v))
                    c += (sum - s) + v;
                else
                    c += (v - s) + sum;
                sum = s;
            };
            piece(total.re, comp.re, t.re);
            piece(total.im, comp.im, t.im);
        } else {
            total += t;
        }
    };
    auto grand_total = [&]() -> Cx<R> {
        if constexpr (std::is_same_v<R, double>)
            return Cx<R>(total.re + comp.re, total.im + comp.im);
        else
            return total;
    };

    RawResult out;
    double prev_shell_mag = std::numeric_limits<double>::infinity();
    int small_run = 0;
    int kmax = terminating ? static_cast<int>(tmax) : pol.max_weight;
    int k = 0;
    for (; k <= kmax; ++k) {
        Cx<R> shell(R(0.0));
        for (const Partition& kap : enumerate_partitions(k, n)) {
            if (!admissible(kap, rb)) continue;
            Cx<R> coef(R(1.0));
            for (const Cd& a : upper) coef = coef * poch_box<R>(a, kap, alpha);
            for (const Cd& b : lower) coef = coef / poch_box<R>(b, kap, alpha);
            coef = coef / Cx<R>(hook_R<R>(kap, alpha));
            Cx<R> term;
            if (two_set) {
                term = coef * jack_R<R>(kap, alpha, xr.data(), n) * jack_R<R>(kap, alpha, yr.data(), n) /
                       Cx<R>(at_ones_R<R>(kap, alpha, n));
            } else {
                term = coef * jack_R<R>(kap, alpha, xr.data(), n);
            }
            shell += term;
            out.max_term = std::max(out.max_term, to_double(abs(term)));
        }
        add_comp(shell);
        double smag = to_double(abs(shell));
        if (smag > 0.0) out.last_shell = smag;
        out.weight_used = k;
        if (!terminating && k >= 1) {
            double tot_mag = to_double(abs(grand_total()));
            double floor_mag = pol.rel_tol * std::max(tot_mag, 1e-300);
            if (smag <= floor_mag && prev_shell_mag <= floor_mag) {
                out.converged = true;
                break;
            }
            prev_shell_mag = smag;
        }
    }
    if (terminating) {
        out.terminated = true;
        out.converged = true;
    }
    Cx<R> g = grand_total();
    out.value = Cd(to_double(g.re), to_double(g.im));
    return out;
}

double eps_of_tier(Prec p) {
    switch (p) {
        case Prec::Dbl: return 2.3e-16;
        case Prec::DblDbl: return 5e-32;
        default: return 0.0;
    }
}

RawResult series_dispatch(double alpha, const std::vector<Cd>& upper, const std::vector<Cd>& lower,
                          const Cd* x, const Cd* y, int n, const TruncationPolicy& pol, bool two_set) {
    Prec mode = pol.precision;
    int bits = pol.big_bits;
    if (mode == Prec::Auto) {
        // spec trigger: terminating upper parameter of magnitude > 40 starts at double-double
        Prec tier = Prec::Dbl;
        for (const Cd& a : upper) {
            long m;
            if (near_nonpos_int(a, &m) && std::abs(a) > 40.0) tier = Prec::DblDbl;
        }
        for (int round = 0; round < 4; ++round) {
            RawResult r;
            if (tier == Prec::Dbl)
                r = series_core<double>(alpha, upper, lower, x, y, n, pol, two_set);
            else if (tier == Prec::DblDbl)
                r = series_core<DD>(alpha, upper, lower, x, y, n, pol, two_set);
            else {
                ScopedBigPrec sb(bits);
                r = series_core<BigFloat>(alpha, upper, lower, x, y, n, pol, two_set);
            }
            double eps = tier == Prec::Big ? std::pow(2.0, -double(bits)) : eps_of_tier(tier);
            double mag = std::abs(r.value);
            double noise = r.max_term * eps;
            if (mag > 0.0 && noise <= 0.05 * pol.rel_tol * mag) return r;
            // escalate
            double cancel = r.max_term / std::max(mag, r.max_term * eps * 10);
            double digits = std::log10(std::max(cancel, 10.0)) - std::log10(pol.rel_tol * 0.01);
            int need_bits = static_cast<int>(digits * 3.33) + 16;
            if (tier == Prec::Dbl && need_bits <= 104) {
                tier = Prec::DblDbl;
            } else {
                if (tier == Prec::Big && need_bits <= bits) return r;  // cannot do better
                tier = Prec::Big;
                bits = std::max({need_bits, bits, 128});
                bits = ((bits + 63) / 64) * 64;
            }
        }
        ScopedBigPrec sb(bits);
        return series_core<BigFloat>(alpha, upper, lower, x, y, n, pol, two_set);
    }
    if (mode == Prec::Dbl) return series_core<double>(alpha, upper, lower, x, y, n, pol, two_set);
    if (mode == Prec::DblDbl) return series_core<DD>(alpha, upper, lower, x, y, n, pol, two_set);
    ScopedBigPrec sb(bits);
    return series_core<BigFloat>(alpha, upper, lower, x, y, n, pol, two_set);
}

void check_lower_poles(const std::vector<Cd>& lower, double alpha, int n) {
    for (const Cd& b : lower) {
        for (int i = 1; i <= n; ++i) {
            Cd v = double(i - 1) / alpha - b;
            if (std::abs(v.imag()) < kIntTol) {
                double r = std::round(v.real());
                if (r >= -0.5 && std::abs(v.real() - r) < kIntTol * (1.0 + std::abs(v.real()))) {
                    std::ostringstream os;
                    os << "lower-parameter pole: (i-1)/alpha - b in N0 for i=" << i
                       << ", b=" << b.real();
                    throw domain_error("hyper", os.str());
                }
            }
        }
    }
}

// 0F0^(inf)(x; y) = (1/n!) sum_sigma prod_j exp(x_j y_sigma(j))
Cd two_set_exp_infinity(const Cd* x, const Cd* y, int n) {
    if (n > 8) throw unsupported("hyper", "alpha=inf permanent form limited to n <= 8");
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    Cd tot = 0.0;
    double cnt = 0.0;
    std::sort(idx.begin(), idx.end());
    do {
        Cd e = 0.0;
        for (int i = 0; i < n; ++i) e += x[i] * y[idx[i]];
        tot += std::exp(e);
        cnt += 1.0;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return tot / cnt;
}

SeriesValue finish(const RawResult& r, const TruncationPolicy& pol) {
    if (!r.converged && pol.require_convergence) {
        std::ostringstream os;
        os << "truncation not converged at max_weight=" << pol.max_weight
           << ", last shell magnitude " << r.last_shell;
        throw not_converged("hyper", os.str());
    }
    SeriesValue v;
    v.value = r.value;
    v.last_shell = r.last_shell;
    v.terminated = r.terminated;
    v.weight_used = r.weight_used;
    v.max_term = r.max_term;
    return v;
}

void check_radius(const HyperSeriesSpec& spec, const Cd* x, int n) {
    if (spec.upper.size() != spec.lower.size() + 1) return;
    RowBounds rb = detect_bounds(spec.upper, spec.alpha, n);
    if (rb.bound[0] != std::numeric_limits<long>::max()) return;  // terminating
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) nrm = std::max(nrm, std::abs(x[i]));
    if (nrm >= 1.0)
        throw domain_error("hyper", "p = q+1 series requires ||x|| < 1 (non-terminating)");
}

}  // namespace

SeriesValue eval_pFq(const HyperSeriesSpec& spec, const Cd* x, int n) {
    if (n <= 0) throw invalid_arg("hyper", "need at least one variable");
    if (!(spec.alpha > 0.0)) throw domain_error("hyper", "alpha must be positive");
    if (std::isinf(spec.alpha)) throw unsupported("hyper", "one-set series at alpha=inf not supported");
    check_lower_poles(spec.lower, spec.alpha, n);
    check_radius(spec, x, n);
    return finish(series_dispatch(spec.alpha, spec.upper, spec.lower, x, nullptr, n, spec.trunc, false),
                  spec.trunc);
}

SeriesValue eval_two_set(const HyperSeriesSpec& spec, const Cd* x, const Cd* y, int n) {
    if (n <= 0) throw invalid_arg("hyper", "need at least one variable");
    if (!(spec.alpha > 0.0)) throw domain_error("hyper", "alpha must be positive");
    if (std::isinf(spec.alpha)) {
        if (!spec.upper.empty() || !spec.lower.empty())
            throw unsupported("hyper", "alpha=inf two-set series supported for 0F0 only");
        SeriesValue v;
        v.value = two_set_exp_infinity(x, y, n);
        v.terminated = false;
        v.weight_used = 0;
        return v;
    }
    check_lower_poles(spec.lower, spec.alpha, n);
    check_radius(spec, x, n);
    return finish(series_dispatch(spec.alpha, spec.upper, spec.lower, x, y, n, spec.trunc, true),
                  spec.trunc);
}

Cd eval_E(int j, double alpha, const Cd* x, int n, const TruncationPolicy& pol) {
    if (j < 0 || j > n) throw invalid_arg("hyper", "E_j requires 0 <= j <= n");
    std::vector<Cd> y(n, 1.0);
    for (int i = 0; i < j; ++i) y[i] = -1.0;
    HyperSeriesSpec spec;
    spec.alpha = alpha;
    spec.trunc = pol;
    return eval_two_set(spec, x, y.data(), n).value;
}

SeriesValue reduce_0F0(const Cd* x, int n, Cd a, Cd b, int k, double alpha,
                       const TruncationPolicy& pol) {
    if (k < 0 || k > n) throw invalid_arg("hyper", "reduction requires 0 <= k <= n");
    HyperSeriesSpec spec;
    spec.alpha = alpha;
    spec.trunc = pol;
    spec.upper = {Cd(double(k) / alpha)};
    spec.lower = {Cd(double(n) / alpha)};
    std::vector<Cd> z(n);
    Cd p1 = 0.0;
    for (int i = 0; i < n; ++i) {
        z[i] = (a - b) * x[i];
        p1 += x[i];
    }
    SeriesValue v = eval_pFq(spec, z.data(), n);
    v.value *= std::exp(b * p1);
    return v;
}

}  // namespace betacp
