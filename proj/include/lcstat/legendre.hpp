#pragma once

#include <functional>

namespace lcstat {

// Legendre polynomial P_n(x) on [-1, 1].
double legendre_P(int n, double x);

// Legendre coefficient a_n = (2n+1)/2 * int_{-1}^{1} f(x) P_n(x) dx.
//
// The integral is evaluated after the substitution x = sin(theta), which
// turns the kernel integrands handled here (sqrt(1-x^2), 1/sqrt(1-x^2),
// arcsin(x)/x) into analytic functions of theta, and leaves smooth f smooth.
// Gauss-Legendre orders double from n_min until successive estimates differ
// by less than tol; non-convergence throws std::runtime_error carrying the
// achieved estimate in the message.
double legendre_project(const std::function<double(double)>& f, int n, double tol = 1e-10);

}  // namespace lcstat
