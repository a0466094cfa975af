#pragma once

#include <vector>

namespace lcstat {

// Clamped cubic spline on a uniform grid (end slopes prescribed).
class UniformCubicSpline {
public:
    UniformCubicSpline() = default;
    UniformCubicSpline(double x0, double h, const std::vector<double>& y, double d_first, double d_last);

    double eval(double x) const;
    double deriv(double x) const;

    // Running integral int_{x0}^{x} of the spline.
    double integral(double x) const;

    double x_min() const { return x0_; }
    double x_max() const { return x0_ + h_ * (static_cast<double>(y_.size()) - 1.0); }
    int n_knots() const { return static_cast<int>(y_.size()); }
    double knot_value(int i) const { return y_[i]; }

private:
    int interval(double x) const;

    double x0_ = 0.0, h_ = 1.0;
    std::vector<double> y_;     // knot values
    std::vector<double> b_;     // first derivative at left knot of each interval
    std::vector<double> c_;     // half second derivative
    std::vector<double> d_;     // sixth third derivative
    std::vector<double> iacc_;  // integral accumulated to each knot
};

}  // namespace lcstat
