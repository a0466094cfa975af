#pragma once

#include <array>

#include "lcstat/quadrature.hpp"
#include "lcstat/sym_tensor.hpp"
#include "lcstat/vec3.hpp"

namespace lcstat {

// Symmetric traceless 3x3 tensor; the zz entry is implied by zero trace.
// Physical as an orientation second moment iff every eigenvalue lies
// strictly inside (-1/3, 2/3).
struct QTensor {
    double xx = 0.0, yy = 0.0, xy = 0.0, xz = 0.0, yz = 0.0;

    double zz() const { return -xx - yy; }
    double comp(int i, int j) const;

    static QTensor from_matrix(const Mat3& M, double tol = 1e-10);
    static QTensor uniaxial(double S2, const Vec3& n);

    Mat3 matrix() const;
    double frobenius2() const;                 // Q : Q
    std::array<double, 3> eigenvalues() const; // ascending
    void eigen_system(std::array<double, 3>& vals, Mat3& vecs) const;  // vecs columns
    bool is_physical() const;
    QTensor rotated(const Mat3& R) const;  // R Q R^T
    SymTensor sym() const;

    friend QTensor operator+(const QTensor& a, const QTensor& b);
    friend QTensor operator*(double f, const QTensor& a);
};

double qtensor_dot(const QTensor& a, const QTensor& b);  // A : B

// Dual field B, partition value Z = int exp(B:mm) dm and the moment-match
// residual of the closure solve.  trace(B) = 0 gauge.
struct BinghamSolution {
    QTensor B;
    double Z = 0.0;
    double residual = 0.0;
};

struct UniaxialState {
    double S2 = 0.0;
    double S4 = 0.0;
    double r = 0.0;
    Vec3 n{0, 0, 1};
};

// Axial Bingham maps, all through the weight exp(r z^2) on z in [0, 1].
// |r| <= 200 (overflow guard; the integrand is rescaled by exp(-max(r,0))).
double s2_from_r(double r);
double s4_from_r(double r);
// Same S4 through the P4 average; agrees with s4_from_r to quadrature
// accuracy (the two arrangements are algebraically identical).
double s4_via_p4(double r);
// ln of the axial partition value Ztilde(r) = 4 pi int_0^1 exp(r z^2) dz.
double log_partition_axial(double r);
// Unique r with s2_from_r(r) = S2, for S2 strictly inside (-1/2, 1) and
// within reach of the |r| <= 200 guard.
double r_from_s2(double S2);

SphereQuadrature default_sphere_quadrature();

// Dual-field solve: find traceless symmetric B with
//   int (mm - I/3) exp(B:mm) dm / Z = Q.
// Solved in Q's eigenframe as a two-unknown damped Newton iteration; the
// given quadrature sets the starting resolution, refined until stable.
BinghamSolution solve_bingham(const QTensor& Q, const SphereQuadrature& quad);
BinghamSolution solve_bingham(const QTensor& Q);

// Fourth-order closure moment int Xi_4(m) exp(B:mm) dm / Z.
SymTensor q4_from_bingham(const BinghamSolution& sol, const SphereQuadrature& quad);
SymTensor q4_from_bingham(const BinghamSolution& sol);

// Orientational entropy density c (ln c + Q:B_Q - ln Z_Q).
double bingham_entropy(double c, const QTensor& Q);

// Immutable spline cache of the axial maps r -> (S2, S4, ln Ztilde) used by
// the one-dimensional minimizer; direct quadrature stays the source of
// truth in tests.  ln Ztilde is the exact integral of the S2 spline (its
// derivative is (2 S2 + 1)/3 identically), so the entropy envelope property
// holds exactly for cached evaluations.
class BinghamTable {
public:
    BinghamTable(double r_min, double r_max, int n_knots);
    static const BinghamTable& instance();

    double s2(double r) const;
    double ds2_dr(double r) const;
    double s4(double r) const;
    double ds4_dr(double r) const;
    double log_partition(double r) const;
    double r_from_s2(double S2) const;

    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    double s2_min() const { return s2_lo_; }
    double s2_max() const { return s2_hi_; }

private:
    double r_min_, r_max_, s2_lo_, s2_hi_, lnz_at_rmin_;
    UniformCubicSpline s2_, s4_;
    std::vector<double> s2_knots_;
};

}  // namespace lcstat
