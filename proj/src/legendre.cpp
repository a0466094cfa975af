#include "lcstat/legendre.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lcstat/quadrature.hpp"

namespace lcstat {

double legendre_P(int n, double x) {
    if (n < 0) throw std::invalid_argument("legendre_P: n must be >= 0");
    if (std::abs(x) > 1.0 + 1e-14) throw std::invalid_argument("legendre_P: |x| must be <= 1");
    x = std::clamp(x, -1.0, 1.0);
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double legendre_project(const std::function<double(double)>& f, int n, double tol) {
    if (n < 0 || n > 6) throw std::invalid_argument("legendre_project: n must be in [0,6]");
    const double half = std::numbers::pi / 2;
    auto g = [&](double theta) {
        const double x = std::sin(theta);
        return f(x) * legendre_P(n, x) * std::cos(theta);
    };
    auto res = adaptive_gauss(g, -half, half, tol, 16, 512);
    const double coeff = (2.0 * n + 1.0) / 2.0 * res.value;
    if (!res.converged) {
        std::ostringstream msg;
        msg << "legendre_project: quadrature did not converge; achieved estimate " << coeff
            << " with residual " << (2.0 * n + 1.0) / 2.0 * res.error_estimate;
        throw std::runtime_error(msg.str());
    }
    return coeff;
}

}  // namespace lcstat
