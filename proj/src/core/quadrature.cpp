#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "errors.hpp"

namespace betacp {

namespace {

GLRule build_gl(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi-style initial guess, then Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

std::map<int, GLRule> g_rules;
std::shared_mutex g_mutex;

}  // namespace

const GLRule& gauss_legendre(int n) {
    if (n < 1) throw invalid_arg("quadrature", "order must be positive");
    {
        std::shared_lock lk(g_mutex);
        auto it = g_rules.find(n);
        if (it != g_rules.end()) return it->second;
    }
    GLRule r = build_gl(n);
    std::unique_lock lk(g_mutex);
    return g_rules.emplace(n, std::move(r)).first->second;
}

std::vector<Node> gl_interval(int n, double a, double b) {
    const GLRule& r = gauss_legendre(n);
    std::vector<Node> out(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) out[i] = {mid + half * r.x[i], half * r.w[i]};
    return out;
}

std::vector<Node> gl_panels(int n, double a, double b, int npanel) {
    std::vector<Node> out;
    out.reserve(size_t(n) * npanel);
    double h = (b - a) / npanel;
    for (int p = 0; p < npanel; ++p) {
        auto seg = gl_interval(n, a + p * h, a + (p + 1) * h);
        out.insert(out.end(), seg.begin(), seg.end());
    }
    return out;
}

}  // namespace betacp
