#include "lcstat/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcstat {

UniformCubicSpline::UniformCubicSpline(double x0, double h, const std::vector<double>& y, double d_first,
                                       double d_last)
    : x0_(x0), h_(h), y_(y) {
    const int n = static_cast<int>(y.size());
    if (n < 3) throw std::invalid_argument("UniformCubicSpline: need at least 3 knots");
    if (!(h > 0.0)) throw std::invalid_argument("UniformCubicSpline: h must be positive");

    // Second derivatives M_i from the clamped tridiagonal system.
    std::vector<double> diag(n), rhs(n), off(n, 1.0), M(n);
    diag[0] = 2.0;
    rhs[0] = 6.0 / h * ((y[1] - y[0]) / h - d_first);
    for (int i = 1; i < n - 1; ++i) {
        diag[i] = 4.0;
        rhs[i] = 6.0 * (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (h * h);
    }
    diag[n - 1] = 2.0;
    rhs[n - 1] = 6.0 / h * (d_last - (y[n - 1] - y[n - 2]) / h);

    for (int i = 1; i < n; ++i) {
        const double w = off[i] / diag[i - 1];
        diag[i] -= w * off[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    M[n - 1] = rhs[n - 1] / diag[n - 1];
    for (int i = n - 2; i >= 0; --i) M[i] = (rhs[i] - off[i] * M[i + 1]) / diag[i];

    b_.resize(n - 1);
    c_.resize(n - 1);
    d_.resize(n - 1);
    iacc_.resize(n, 0.0);
    double acc = 0.0, comp = 0.0;
    for (int i = 0; i < n - 1; ++i) {
        b_[i] = (y[i + 1] - y[i]) / h - h * (2.0 * M[i] + M[i + 1]) / 6.0;
        c_[i] = 0.5 * M[i];
        d_[i] = (M[i + 1] - M[i]) / (6.0 * h);
        // Kahan-accumulated exact integral of the piecewise cubic
        const double piece = h * (y_[i] + h * (b_[i] / 2.0 + h * (c_[i] / 3.0 + h * d_[i] / 4.0)));
        const double t = piece - comp;
        const double s = acc + t;
        comp = (s - acc) - t;
        acc = s;
        iacc_[i + 1] = acc;
    }
}

int UniformCubicSpline::interval(double x) const {
    const int n = static_cast<int>(y_.size());
    int i = static_cast<int>(std::floor((x - x0_) / h_));
    return std::clamp(i, 0, n - 2);
}

double UniformCubicSpline::eval(double x) const {
    const int i = interval(x);
    const double u = x - (x0_ + h_ * i);
    return y_[i] + u * (b_[i] + u * (c_[i] + u * d_[i]));
}

double UniformCubicSpline::deriv(double x) const {
    const int i = interval(x);
    const double u = x - (x0_ + h_ * i);
    return b_[i] + u * (2.0 * c_[i] + u * 3.0 * d_[i]);
}

double UniformCubicSpline::integral(double x) const {
    const int i = interval(x);
    const double u = x - (x0_ + h_ * i);
    return iacc_[i] + u * (y_[i] + u * (b_[i] / 2.0 + u * (c_[i] / 3.0 + u * d_[i] / 4.0)));
}

}  // namespace lcstat
