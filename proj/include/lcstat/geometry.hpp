#pragma once

#include <array>

#include "lcstat/sym_tensor.hpp"
#include "lcstat/vec3.hpp"

namespace lcstat {

// Spherocylinder: a rod of length L capped by hemispheres of diameter D.
struct RodGeometry {
    double L = 1.0;
    double D = 0.1;

    RodGeometry() = default;
    RodGeometry(double length, double diameter);

    double eta() const { return D / L; }
};

// Orthonormal frame attached to an axis pair (m, m'):
//   n1 || m + m',  n2 || m - m',  n3 = n1 x n2,
// with the half-angle beta defined by m . m' = cos(2 beta).  Undefined for
// parallel or antiparallel axes.
struct PairFrame {
    Vec3 m, m2;
    double cos_gamma, sin_gamma;
    double cos_beta, sin_beta;
    Vec3 n1, n2, n3;

    static PairFrame from_axes(const Vec3& m, const Vec3& m2);
};

// True iff two spherocylinders with center offset r and axes m, m2 overlap,
// i.e. the segment-segment distance is below D.
bool rods_overlap(const Vec3& r, const Vec3& m, const Vec3& m2, const RodGeometry& geom);

// Zeroth moment of the overlap indicator (the pair excluded volume),
//   2 L^2 D sin(gamma) + 2 pi D^2 L + 4/3 pi D^3.
double excluded_volume(double gamma, const RodGeometry& geom);

// Diagonal entries (M1, M2, M3) of the second moment in the (n1, n2, n3)
// frame, as closed-form region sums.  gamma must lie strictly in (0, pi).
std::array<double, 3> second_moment_diag(double gamma, const RodGeometry& geom);

// Frame-diagonal fourth moments (W1..W6) = integrals of
// (r1^4, r2^4, r3^4, r1^2 r2^2, r2^2 r3^2, r1^2 r3^2) against the overlap
// indicator, summed over the body-body, body-end and (doubled) end-end
// regions.
std::array<double, 6> fourth_moment_frame(double gamma, const RodGeometry& geom);

// Scalar coefficients of the second-moment decomposition
//   M^(2) = B1 I + B2 (mm + m'm') + B3 (mm' + m'm)(m.m'),
// as functions of x = m.m'.  B2 and B3 individually diverge as |x| -> 1;
// the pointwise path refuses |x| > 1 - 1e-6.
std::array<double, 3> kernel_B(double x, const RodGeometry& geom);

// Scalar coefficients (R1..R6) of the fourth-moment decomposition over the
// basis {(dd)_sym, (d mm + d m'm')_sym, (d m m')_sym, (mmmm + m'4),
// (mmm'm')_sym, (mmmm' + m'm'm'm)_sym}, assembled from the frame-diagonal
// moments.  Same near-parallel restriction as kernel_B.
std::array<double, 6> kernel_R(double x, const RodGeometry& geom);

// Full lab-frame second moment for the axis pair (m, m').
Mat3 second_moment_tensor(const Vec3& m, const Vec3& m2, const RodGeometry& geom);

// Full lab-frame fourth moment, assembled from the frame-diagonal moments.
SymTensor fourth_moment_tensor(const Vec3& m, const Vec3& m2, const RodGeometry& geom);

// Reconstructions from the scalar coefficient sets (the decomposition side
// of the identities; used to cross-check kernel_B / kernel_R).
Mat3 second_moment_from_B(const std::array<double, 3>& B, const Vec3& m, const Vec3& m2);
SymTensor fourth_moment_from_R(const std::array<double, 6>& R, const Vec3& m, const Vec3& m2);

}  // namespace lcstat
