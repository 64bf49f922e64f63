#include "jack.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "errors.hpp"
#include "monomials.hpp"

namespace betacp {

namespace {

std::string pstr(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.part(i);
    os << ")";
    return os.str();
}

bool sorted_desc(const std::vector<int>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

}  // namespace

std::vector<MonomialOpTerm> lb_operator_on_monomial(const Partition& mu, int nvars) {
    if (mu.length() > nvars) return {};
    // accumulate only the descending representative of each target monomial
    std::map<std::vector<int>, std::pair<double, double>> acc;
    auto add = [&](const std::vector<int>& v, double a, double b) {
        std::vector<int> w = v;
        if (!sorted_desc(w)) return;
        auto& e = acc[w];
        e.first += a;
        e.second += b;
    };
    const double wmu = mu.weight();
    for (const auto& v : distinct_arrangements(mu, nvars)) {
        // x_i^2 d^2/dx_i^2 and -(n-1)E1 parts are diagonal per arrangement
        double d2 = 0.0;
        for (int e : v) d2 += double(e) * (e - 1);
        add(v, d2, -(nvars - 1) * wmu);
        // pair interactions; each unordered value pair handled once
        for (int i = 0; i < nvars; ++i) {
            for (int j = i + 1; j < nvars; ++j) {
                int a = v[i], b = v[j];
                if (a < b) continue;  // the swapped arrangement handles it
                if (a == b) {
                    add(v, 0.0, a);
                    continue;
                }
                // covers both v and swap_ij(v):
                //   a (x^v + x^swap) + (a-b) sum_{r=1}^{a-b-1} x^{(a-r, b+r)}
                add(v, 0.0, a);
                std::vector<int> w = v;
                std::swap(w[i], w[j]);
                add(w, 0.0, a);
                for (int r = 1; r <= a - b - 1; ++r) {
                    w = v;
                    w[i] = a - r;
                    w[j] = b + r;
                    add(w, 0.0, double(a - b));
                }
            }
        }
    }
    std::vector<MonomialOpTerm> out;
    for (auto& [v, ab] : acc) {
        std::vector<int> parts = v;
        out.push_back({Partition(parts), ab.first, ab.second});
    }
    return out;
}

double jack_eigenvalue(const Partition& kappa, double alpha) {
    double e = 0.0;
    for (int i = 0; i < kappa.length(); ++i) {
        double k = kappa.part(i);
        e += k * (k - 1) - (2.0 / alpha) * i * k;
    }
    return e;
}

namespace {

struct CacheKey {
    std::vector<int> parts;
    double alpha;
    int nvars;
    bool operator<(const CacheKey& o) const {
        if (parts != o.parts) return parts < o.parts;
        if (alpha != o.alpha) return alpha < o.alpha;
        return nvars < o.nvars;
    }
};

std::map<CacheKey, std::shared_ptr<const JackExpansion>> g_cache;
std::shared_mutex g_cache_mutex;

std::shared_ptr<const JackExpansion> build_expansion(const Partition& kappa, double alpha, int n) {
    const int w = kappa.weight();
    const auto& basis = enumerate_partitions(w, n);
    const int dim = static_cast<int>(basis.size());
    // basis is in reverse-lex order: dominance-lower partitions come later
    int kidx = -1;
    for (int i = 0; i < dim; ++i)
        if (basis[i] == kappa) { kidx = i; break; }

    // operator matrix in (a, b) split form, column = target index
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < dim; ++i) index[basis[i].parts()] = i;
    std::vector<std::vector<std::pair<int, double>>> col_terms(dim);  // per source row
    std::vector<double> diag(dim);
    for (int r = 0; r < dim; ++r) {
        for (const auto& t : lb_operator_on_monomial(basis[r], n)) {
            double c = t.a_part + (2.0 / alpha) * t.b_part;
            int ci = index.at(t.target.parts());
            if (ci == r)
                diag[r] = c;
            else
                col_terms[r].push_back({ci, c});
        }
    }

    const double eps_k = diag[kidx];
    std::vector<std::complex<double>> c(dim, 0.0);
    c[kidx] = 1.0;
    for (int m = kidx + 1; m < dim; ++m) {
        // row m of (O - eps_k) P = 0:  c_m (eps_m - eps_k) + sum_{l<m} c_l A_{l m} = 0
        std::complex<double> rhs = 0.0;
        for (int l = kidx; l < m; ++l) {
            if (c[l] == std::complex<double>(0.0)) continue;
            for (const auto& [ci, a] : col_terms[l])
                if (ci == m) rhs += c[l] * a;
        }
        if (rhs == std::complex<double>(0.0)) continue;
        double gap = eps_k - diag[m];
        if (std::abs(gap) < 1e-9 * (1.0 + std::abs(eps_k))) {
            throw degenerate("jack", "degenerate parameter: eigenvalue collision between " +
                                         pstr(kappa) + " and " + pstr(basis[m]) +
                                         " at alpha=" + std::to_string(alpha));
        }
        c[m] = rhs / gap;
    }

    auto out = std::make_shared<JackExpansion>();
    out->kappa = kappa;
    out->alpha = alpha;
    out->nvars = n;
    for (int i = kidx; i < dim; ++i) {
        if (i == kidx || std::abs(c[i]) > 0.0) out->coeffs.push_back({basis[i], c[i]});
    }
    return out;
}

}  // namespace

std::shared_ptr<const JackExpansion> jack_expansion(const Partition& kappa, double alpha, int nvars) {
    if (!(alpha > 0.0)) throw domain_error("jack", "alpha must be positive");
    if (kappa.length() > nvars)
        throw domain_error("jack", "vanishing polynomial: l(kappa) > n for " + pstr(kappa));
    int n_eff = std::min(nvars, std::max(kappa.weight(), 1));
    CacheKey key{kappa.parts(), alpha, n_eff};
    {
        std::shared_lock lk(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    auto e = build_expansion(kappa, alpha, n_eff);
    std::unique_lock lk(g_cache_mutex);
    return g_cache.emplace(key, std::move(e)).first->second;
}

std::complex<double> JackExpansion::eval(const std::complex<double>* x, int n) const {
    std::complex<double> tot = 0.0;
    for (const auto& [mu, c] : coeffs) {
        if (mu.length() > n) continue;
        tot += c * monomial_eval(mu, x, n);
    }
    return tot;
}

std::complex<double> jack_eval(const JackExpansion& e, const std::complex<double>* x, int n) {
    return e.eval(x, n);
}

double jack_at_ones(const Partition& kappa, double alpha, int n) {
    if (!(alpha > 0.0)) throw domain_error("jack", "alpha must be positive");
    if (kappa.length() > n) return 0.0;
    // alpha^|k| [n/alpha]_k / prod(alpha*arm + leg + 1)
    double v = 1.0;
    for (const auto& b : box_stats(kappa)) {
        v *= alpha * (double(n) / alpha + b.coarm - b.coleg / alpha);
        v /= alpha * b.arm + b.leg + 1.0;
    }
    return v;
}

}  // namespace betacp
