#pragma once

#include <array>

namespace lcstat {

// Closed-form expansion coefficients entering the elastic energy assembly.
//
// alpha_ij are the Legendre-mode coefficients of the second-moment kernel
// functions B_1, B_2, B_3 (scaled by pi L^4 D), polynomials in eta of degree
// <= 4.  mu_ij are the O(eta) fourth-moment expansion coefficients.  The
// tables hold the leading Legendre coefficients of sqrt(1-x^2),
// 1/sqrt(1-x^2) and arcsin(x)/x, and b_n is the leading coefficient of P_n.
struct ExpansionCoefficients {
    double alpha11, alpha12, alpha13;
    double alpha21, alpha22;
    double alpha31, alpha32;

    double mu11, mu21, mu22;

    std::array<double, 3> sqrt_coeff;      // orders 0, 2, 4
    std::array<double, 2> inv_sqrt_coeff;  // orders 0, 2
    std::array<double, 2> arcsin_coeff;    // orders 0, 2

    std::array<double, 5> b;  // b[n] for n = 1..4; b[0] unused
};

ExpansionCoefficients expansion_coefficients(double eta);

}  // namespace lcstat
