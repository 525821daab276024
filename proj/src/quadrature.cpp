#include "twistlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace twistlab {

static GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw PreconditionError("gauss_legendre: n must be positive");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    const auto& rule = gauss_legendre(n);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += rule.weights[i] * f(c + h * rule.nodes[i]);
    return acc * h;
}

Cx integrate_gl_cx(const std::function<Cx(double)>& f, double a, double b, int n) {
    const auto& rule = gauss_legendre(n);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Cx acc = 0.0;
    for (int i = 0; i < n; ++i) acc += rule.weights[i] * f(c + h * rule.nodes[i]);
    return acc * h;
}

Cx integrate_split_cx(const std::function<Cx(double)>& f, double a, double b,
                      const std::vector<double>& breakpoints, int n) {
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double t : breakpoints)
        if (t > a + 1e-15 && t < b - 1e-15) cuts.push_back(t);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    Cx acc = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        acc += integrate_gl_cx(f, cuts[k], cuts[k + 1], n);
    return acc;
}

double halton(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

std::vector<double> halton_point(std::uint64_t index, int dims) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (dims > static_cast<int>(sizeof(primes) / sizeof(primes[0])))
        throw PreconditionError("halton_point: too many dimensions");
    std::vector<double> p(dims);
    for (int a = 0; a < dims; ++a) p[a] = halton(index, primes[a]);
    return p;
}

}  // namespace twistlab
