#include "monomials.hpp"

#include <algorithm>
#include <map>

namespace betacp {

std::vector<std::vector<int>> distinct_arrangements(const Partition& mu, int n) {
    std::vector<std::vector<int>> out;
    if (mu.length() > n) return out;
    std::vector<int> v(n, 0);
    for (int i = 0; i < mu.length(); ++i) v[i] = mu.part(i);
    std::sort(v.begin(), v.end());
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace {

using C = std::complex<double>;

C ipow(C x, int k) {
    C r = 1.0;
    while (k > 0) {
        if (k & 1) r *= x;
        x *= x;
        k >>= 1;
    }
    return r;
}

C eval_direct(const Partition& mu, const C* x, int n) {
    C tot = 0.0;
    for (const auto& v : distinct_arrangements(mu, n)) {
        C t = 1.0;
        for (int i = 0; i < n; ++i)
            if (v[i] > 0) t *= ipow(x[i], v[i]);
        tot += t;
    }
    return tot;
}

// All set partitions of {0..m-1}, as block lists, generated iteratively via
// restricted-growth strings.
std::vector<std::vector<std::vector<int>>> set_partitions(int m) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(m, 0), maxv(m, 0);
    while (true) {
        int nb = 0;
        for (int i = 0; i < m; ++i) nb = std::max(nb, rgs[i] + 1);
        std::vector<std::vector<int>> blocks(nb);
        for (int i = 0; i < m; ++i) blocks[rgs[i]].push_back(i);
        out.push_back(std::move(blocks));
        int i = m - 1;
        while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
        if (i == 0) break;
        ++rgs[i];
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (int j = i + 1; j < m; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[i];
        }
    }
    return out;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<PowerSumTerm> monomial_powersum_terms(const Partition& mu) {
    int m = mu.length();
    std::vector<PowerSumTerm> out;
    double mult = 1.0;  // prod of multiplicities factorial
    {
        std::map<int, int> cnt;
        for (int i = 0; i < m; ++i) ++cnt[mu.part(i)];
        for (auto& [p, c] : cnt) mult *= factorial(c);
    }
    for (const auto& blocks : set_partitions(m)) {
        PowerSumTerm t;
        t.coeff = 1.0 / mult;
        for (const auto& B : blocks) {
            int w = 0;
            for (int i : B) w += mu.part(i);
            t.powers.push_back(w);
            if (B.size() % 2 == 0) t.coeff = -t.coeff;
            t.coeff *= factorial(static_cast<int>(B.size()) - 1);
        }
        std::sort(t.powers.begin(), t.powers.end());
        out.push_back(std::move(t));
    }
    return out;
}

std::complex<double> monomial_eval(const Partition& mu, const C* x, int n) {
    if (mu.length() > n) return 0.0;
    if (mu.empty()) return 1.0;
    if (n <= 4) return eval_direct(mu, x, n);
    // power sums up to max needed degree
    int maxdeg = mu.weight();
    std::vector<C> ps(maxdeg + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        C p = 1.0;
        for (int d = 1; d <= maxdeg; ++d) {
            p *= x[i];
            ps[d] += p;
        }
    }
    C tot = 0.0;
    for (const auto& t : monomial_powersum_terms(mu)) {
        C v = t.coeff;
        for (int w : t.powers) v *= ps[w];
        tot += v;
    }
    return tot;
}

std::complex<double> monomial_deriv(const Partition& mu, const C* x, int n, int k) {
    if (mu.length() > n || mu.empty()) return 0.0;
    C tot = 0.0;
    for (const auto& v : distinct_arrangements(mu, n)) {
        if (v[k] == 0) continue;
        C t = double(v[k]) * ipow(x[k], v[k] - 1);
        for (int i = 0; i < n; ++i)
            if (i != k && v[i] > 0) t *= ipow(x[i], v[i]);
        tot += t;
    }
    return tot;
}

std::complex<double> monomial_deriv2(const Partition& mu, const C* x, int n, int k) {
    if (mu.length() > n || mu.empty()) return 0.0;
    C tot = 0.0;
    for (const auto& v : distinct_arrangements(mu, n)) {
        if (v[k] < 2) continue;
        C t = double(v[k]) * double(v[k] - 1) * ipow(x[k], v[k] - 2);
        for (int i = 0; i < n; ++i)
            if (i != k && v[i] > 0) t *= ipow(x[i], v[i]);
        tot += t;
    }
    return tot;
}

}  // namespace betacp
