#pragma once

#include <functional>
#include <vector>

#include "lcstat/vec3.hpp"

namespace lcstat {

struct GaussLegendre {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;  // sum = 2
};

// Cached Gauss-Legendre rule of order n (nodes by Newton iteration on P_n).
const GaussLegendre& gauss_legendre(int n);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

// Integrate f on [a, b] with Gauss-Legendre rules of doubling order
// (n_min, 2 n_min, ...) until two successive estimates differ by less than
// tol; error_estimate is the last difference.
QuadratureResult adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                                double tol = 1e-12, int n_min = 16, int n_max = 1024);

// Node/weight set on the unit sphere; weights sum to 4*pi.  Built as a
// product of Gauss-Legendre in cos(theta) and a uniform trapezoid in phi,
// exact for spherical polynomials up to the declared degree.
struct SphereQuadrature {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int n_z = 0;
    int n_phi = 0;
    int degree = 0;
};

SphereQuadrature build_sphere_quadrature(int n_z, int n_phi);

}  // namespace lcstat
