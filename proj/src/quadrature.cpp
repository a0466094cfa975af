#include "lcstat/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace lcstat {

namespace {

GaussLegendre compute_rule(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // P_n(x) and P_n'(x) by the three-term recurrence
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

QuadratureResult adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                                double tol, int n_min, int n_max) {
    const double mid = 0.5 * (a + b);
    const double hal = 0.5 * (b - a);
    auto eval = [&](int n) {
        const auto& rule = gauss_legendre(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + hal * rule.nodes[i]);
        return hal * sum;
    };
    QuadratureResult res;
    double prev = eval(n_min);
    for (int n = 2 * n_min; n <= n_max; n *= 2) {
        const double cur = eval(n);
        res.value = cur;
        res.error_estimate = std::abs(cur - prev);
        if (res.error_estimate < tol) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.value = prev;
    res.converged = false;
    return res;
}

SphereQuadrature build_sphere_quadrature(int n_z, int n_phi) {
    if (n_z < 1 || n_phi < 1) throw std::invalid_argument("build_sphere_quadrature: sizes must be positive");
    SphereQuadrature q;
    q.n_z = n_z;
    q.n_phi = n_phi;
    q.degree = std::min(2 * n_z - 1, n_phi - 1);
    const auto& gl = gauss_legendre(n_z);
    const double wphi = 2.0 * std::numbers::pi / n_phi;
    q.nodes.reserve(static_cast<std::size_t>(n_z) * n_phi);
    q.weights.reserve(static_cast<std::size_t>(n_z) * n_phi);
    for (int iz = 0; iz < n_z; ++iz) {
        const double z = gl.nodes[iz];
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int ip = 0; ip < n_phi; ++ip) {
            const double phi = wphi * ip;
            q.nodes.push_back({s * std::cos(phi), s * std::sin(phi), z});
            q.weights.push_back(gl.weights[iz] * wphi);
        }
    }
    return q;
}

}  // namespace lcstat
