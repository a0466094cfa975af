#include "lcstat/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lcstat {

namespace {

constexpr double kPi = std::numbers::pi;

double arcsin_over_x(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + 3.0 * x2 * x2 / 40.0;
    }
    return std::asin(x) / x;
}

// Squared distance between segments p1 + s d1 and p2 + t d2, s,t in [0,1].
double segment_segment_dist2(const Vec3& p1, const Vec3& d1, const Vec3& p2, const Vec3& d2) {
    const Vec3 r = p1 - p2;
    const double a = dot(d1, d1);
    const double e = dot(d2, d2);
    const double b = dot(d1, d2);
    const double c = dot(d1, r);
    const double f = dot(d2, r);
    const double denom = a * e - b * b;

    double s = 0.0;
    if (denom > 1e-13 * a * e) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
    double t = (b * s + f) / e;
    if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
    }
    const Vec3 diff = (p1 + s * d1) - (p2 + t * d2);
    return norm2(diff);
}

struct FrameAngles {
    double s;   // sin(gamma)
    double cb;  // cos(beta)
    double sb;  // sin(beta)
    double beta;
    double gamma;
};

FrameAngles angles(double gamma) {
    FrameAngles a;
    a.gamma = gamma;
    a.beta = 0.5 * gamma;
    a.s = std::sin(gamma);
    a.cb = std::cos(a.beta);
    a.sb = std::sin(a.beta);
    return a;
}

}  // namespace

RodGeometry::RodGeometry(double length, double diameter) : L(length), D(diameter) {
    if (!(L > 0.0) || !(D > 0.0)) throw std::invalid_argument("RodGeometry: L and D must be positive");
    if (D / L > 1.0 + 1e-12) throw std::invalid_argument("RodGeometry: aspect eta = D/L must be <= 1");
}

PairFrame PairFrame::from_axes(const Vec3& m, const Vec3& m2) {
    PairFrame f;
    f.m = m;
    f.m2 = m2;
    f.cos_gamma = std::clamp(dot(m, m2), -1.0, 1.0);
    f.sin_gamma = norm(cross(m, m2));
    if (f.sin_gamma < 1e-12) throw std::domain_error("PairFrame: frame undefined for (anti)parallel axes");
    f.cos_beta = std::sqrt(0.5 * (1.0 + f.cos_gamma));
    f.sin_beta = std::sqrt(0.5 * (1.0 - f.cos_gamma));
    f.n1 = (m + m2) / (2.0 * f.cos_beta);
    f.n2 = (m - m2) / (2.0 * f.sin_beta);
    f.n3 = cross(f.n1, f.n2);
    return f;
}

bool rods_overlap(const Vec3& r, const Vec3& m, const Vec3& m2, const RodGeometry& geom) {
    const Vec3 d1 = geom.L * m;
    const Vec3 d2 = geom.L * m2;
    const Vec3 p1 = -0.5 * geom.L * m;
    const Vec3 p2 = r - 0.5 * geom.L * m2;
    return segment_segment_dist2(p1, d1, p2, d2) < geom.D * geom.D;
}

double excluded_volume(double gamma, const RodGeometry& geom) {
    const double L = geom.L, D = geom.D;
    return 2.0 * L * L * D * std::sin(gamma) + 2.0 * kPi * D * D * L + 4.0 / 3.0 * kPi * D * D * D;
}

std::array<double, 3> second_moment_diag(double gamma, const RodGeometry& geom) {
    if (!(gamma > 0.0) || !(gamma < kPi)) throw std::domain_error("second_moment_diag: frame undefined at gamma in {0, pi}");
    const auto a = angles(gamma);
    const double L = geom.L, D = geom.D;
    const double cb2 = a.cb * a.cb, sb2 = a.sb * a.sb;
    const double L4D = L * L * L * L * D;
    const double L3D2 = L * L * L * D * D;
    const double L2D3 = L * L * D * D * D;
    const double LD4 = L * D * D * D * D;
    const double D5 = D * D * D * D * D;

    const double M1 = (L4D * a.s / 3 + 2 * kPi * L3D2 / 3 + 4 * (kPi - gamma) * L2D3 / 3 + kPi * LD4) * cb2 +
                      4 * L2D3 * a.s / 3 + kPi * LD4 * sb2 / 2 + 4 * kPi * D5 / 15;
    const double M2 = (L4D * a.s / 3 + 2 * kPi * L3D2 / 3 + 4 * gamma * L2D3 / 3 + kPi * LD4) * sb2 +
                      4 * L2D3 * a.s / 3 + kPi * LD4 * cb2 / 2 + 4 * kPi * D5 / 15;
    const double M3 = 2 * L2D3 * a.s / 3 + kPi * LD4 / 2 + 4 * kPi * D5 / 15;
    return {M1, M2, M3};
}

std::array<double, 6> fourth_moment_frame(double gamma, const RodGeometry& geom) {
    if (!(gamma > 0.0) || !(gamma < kPi)) throw std::domain_error("fourth_moment_frame: frame undefined at gamma in {0, pi}");
    const auto a = angles(gamma);
    const double L = geom.L, D = geom.D;
    const double cb = a.cb, sb = a.sb, s = a.s, beta = a.beta;
    const double cb2 = cb * cb, cb3 = cb2 * cb, cb4 = cb3 * cb;
    const double sb2 = sb * sb, sb3 = sb2 * sb, sb4 = sb3 * sb;

    const double L6D = std::pow(L, 6) * D;
    const double L5D2 = std::pow(L, 5) * D * D;
    const double L4D3 = std::pow(L, 4) * std::pow(D, 3);
    const double L3D4 = std::pow(L, 3) * std::pow(D, 4);
    const double L2D5 = L * L * std::pow(D, 5);
    const double LD6 = L * std::pow(D, 6);
    const double D7 = std::pow(D, 7);

    // Body-body region: a 2D-high parallelepiped over a rhombus section.
    const double A1 = 2.0 / 15.0 * L6D * s * cb4;
    const double A2 = 2.0 / 15.0 * L6D * s * sb4;
    const double A3 = 2.0 / 5.0 * L2D5 * s;
    const double A4 = 1.0 / 45.0 * L6D * s * cb2 * sb2;
    const double A5 = 1.0 / 9.0 * L4D3 * s * sb2;
    const double A6 = 1.0 / 9.0 * L4D3 * s * cb2;

    // Body-end region: four half-cylinders along the rod sides.
    const double B1 = 2 * kPi / 5 * L5D2 * cb4 + 8.0 / 3.0 * L4D3 * cb3 * sb + kPi * L3D4 * cb2 * sb2 +
                      32.0 / 15.0 * L2D5 * cb * sb3 + kPi / 4 * LD6 * sb4;
    const double B2 = 2 * kPi / 5 * L5D2 * sb4 + 8.0 / 3.0 * L4D3 * sb3 * cb + kPi * L3D4 * sb2 * cb2 +
                      32.0 / 15.0 * L2D5 * sb * cb3 + kPi / 4 * LD6 * cb4;
    const double B3 = kPi / 4 * LD6;
    const double B4 = kPi / 6 * L3D4 * (cb4 + sb4) + (4.0 / 9.0 * L4D3 + 16.0 / 15.0 * L2D5) * (cb3 * sb + sb3 * cb) +
                      (kPi / 15 * L5D2 + kPi / 3 * L3D4 + kPi / 4 * LD6) * cb2 * sb2;
    const double B5 = kPi / 6 * L3D4 * sb2 + 8.0 / 15.0 * L2D5 * cb * sb + kPi / 12 * LD6 * cb2;
    const double B6 = kPi / 6 * L3D4 * cb2 + 8.0 / 15.0 * L2D5 * cb * sb + kPi / 12 * LD6 * sb2;

    // End-end corner spheres; the two wedges below cover half of the four
    // corners, the other half contributes equally to even moments.
    const double CI1 = 16.0 / 105.0 * D7 * (3 * beta / 4 + cb3 * sb / 4 - sb3 * cb / 4 - cb * sb);
    const double CI2 = 4.0 / 3.0 * L4D3 * beta * sb4 + kPi * L3D4 * sb4 + 8.0 / 5.0 * L2D5 * sb2 * (beta + cb * sb) +
                       kPi / 6 * LD6 * sb2 * (3 - sb2) +
                       16.0 / 105.0 * D7 * (3 * beta / 4 + cb3 * sb / 4 - sb3 * cb / 4 + cb * sb);
    const double CI3 = 4.0 / 35.0 * D7 * beta;
    const double CI4 = 4.0 / 15.0 * L2D5 * sb2 * (beta - cb * sb) + kPi / 12 * LD6 * sb4 +
                       16.0 / 105.0 * D7 * (beta / 4 - cb3 * sb / 4 + sb3 * cb / 4);
    const double CI5 = 4.0 / 15.0 * L2D5 * beta * sb2 + kPi / 12 * LD6 * sb2 + 4.0 / 105.0 * D7 * (beta + cb * sb);
    const double CI6 = 4.0 / 105.0 * D7 * (beta - cb * sb);

    const double CII1 = 2.0 / 3.0 * L4D3 * (kPi - gamma) * cb4 + kPi * L3D4 * cb4 +
                        8.0 / 5.0 * L2D5 * cb2 * (kPi / 2 - beta + cb * sb) + kPi / 6 * LD6 * cb2 * (3 - cb2) +
                        16.0 / 105.0 * D7 * (3 * kPi / 8 - 3 * beta / 4 - cb3 * sb / 4 + sb3 * cb / 4 + cb * sb);
    const double CII2 = 16.0 / 105.0 * D7 * (3 * kPi / 8 - 3 * beta / 4 - cb3 * sb / 4 + sb3 * cb / 4 - cb * sb);
    const double CII3 = 2.0 / 35.0 * D7 * (kPi - gamma);
    const double CII4 = 4.0 / 15.0 * L2D5 * cb2 * (kPi / 2 - beta - cb * sb) + kPi / 12 * LD6 * cb4 +
                        16.0 / 105.0 * D7 * (kPi / 8 - beta / 4 + cb3 * sb / 4 - sb3 * cb / 4);
    const double CII5 = 4.0 / 105.0 * D7 * (kPi / 2 - beta - cb * sb);
    const double CII6 = 2.0 / 15.0 * L2D5 * (kPi - gamma) * cb2 + kPi / 12 * LD6 * cb2 +
                        4.0 / 105.0 * D7 * (kPi / 2 - beta + cb * sb);

    return {A1 + B1 + 2 * (CI1 + CII1), A2 + B2 + 2 * (CI2 + CII2), A3 + B3 + 2 * (CI3 + CII3),
            A4 + B4 + 2 * (CI4 + CII4), A5 + B5 + 2 * (CI5 + CII5), A6 + B6 + 2 * (CI6 + CII6)};
}

std::array<double, 3> kernel_B(double x, const RodGeometry& geom) {
    if (std::abs(x) > 1.0 - 1e-6)
        throw std::domain_error("kernel_B: B2/B3 diverge near parallel axes; use the Legendre-coefficient path");
    const double L = geom.L, D = geom.D;
    const double eta = geom.eta();
    const double s = std::sqrt(1.0 - x * x);
    const double L4D = std::pow(L, 4) * D;
    const double e2 = eta * eta, e3 = e2 * eta, e4 = e3 * eta;

    const double B1 = L4D * (2.0 * s * e2 / 3.0 + kPi * e3 / 2.0 + 4.0 * kPi * e4 / 15.0);
    const double B2 = L4D * (s / 6.0 + kPi * eta * (1.0 + eta) / 3.0 + kPi * e3 / 4.0 + 2.0 * e2 / (3.0 * s));
    const double B3 = L4D * e2 * (2.0 * arcsin_over_x(x) / 3.0 - 2.0 / (3.0 * s));
    return {B1, B2, B3};
}

std::array<double, 6> kernel_R(double x, const RodGeometry& geom) {
    if (std::abs(x) > 1.0 - 1e-6)
        throw std::domain_error("kernel_R: near-parallel singularity; use the Legendre-coefficient path");
    const double gamma = std::acos(x);
    const auto W = fourth_moment_frame(gamma, geom);
    const double cb2 = 0.5 * (1.0 + x);
    const double sb2 = 0.5 * (1.0 - x);

    const double R1 = W[2] / 3.0;
    const double T = (W[5] - W[2] / 3.0) / (4.0 * cb2);
    const double U = (W[4] - W[2] / 3.0) / (4.0 * sb2);
    const double P = (W[0] + W[2] - 6.0 * W[5]) / (16.0 * cb2 * cb2);
    const double Q = (W[1] + W[2] - 6.0 * W[4]) / (16.0 * sb2 * sb2);
    const double S = (W[3] + W[2] / 3.0 - W[4] - W[5]) / (16.0 * cb2 * sb2);
    return {R1, T + U, T - U, P + Q + 6.0 * S, P + Q - 2.0 * S, P - Q};
}

Mat3 second_moment_tensor(const Vec3& m, const Vec3& m2, const RodGeometry& geom) {
    const auto f = PairFrame::from_axes(m, m2);
    const auto M = second_moment_diag(std::acos(f.cos_gamma), geom);
    Mat3 out;
    const Vec3 n[3] = {f.n1, f.n2, f.n3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out(i, j) += M[k] * n[k][i] * n[k][j];
    return out;
}

SymTensor fourth_moment_tensor(const Vec3& m, const Vec3& m2, const RodGeometry& geom) {
    const auto f = PairFrame::from_axes(m, m2);
    const auto W = fourth_moment_frame(std::acos(f.cos_gamma), geom);
    SymTensor out(4);
    out += W[0] * outer_power(f.n1, 4);
    out += W[1] * outer_power(f.n2, 4);
    out += W[2] * outer_power(f.n3, 4);
    out += W[3] * sym_uuww(f.n1, f.n2);
    out += W[4] * sym_uuww(f.n2, f.n3);
    out += W[5] * sym_uuww(f.n1, f.n3);
    return out;
}

Mat3 second_moment_from_B(const std::array<double, 3>& B, const Vec3& m, const Vec3& m2) {
    const double x = dot(m, m2);
    Mat3 out;
    for (int i = 0; i < 3; ++i) {
        out(i, i) += B[0];
        for (int j = 0; j < 3; ++j) {
            out(i, j) += B[1] * (m[i] * m[j] + m2[i] * m2[j]);
            out(i, j) += B[2] * x * (m[i] * m2[j] + m2[i] * m[j]);
        }
    }
    return out;
}

SymTensor fourth_moment_from_R(const std::array<double, 6>& R, const Vec3& m, const Vec3& m2) {
    SymTensor out(4);
    out += R[0] * sigma_tensor(m, 0, 2);
    out += R[1] * (sigma_tensor(m, 2, 1) + sigma_tensor(m2, 2, 1));
    out += R[2] * sym_delta_uw(m, m2);
    out += R[3] * (outer_power(m, 4) + outer_power(m2, 4));
    out += R[4] * sym_uuww(m, m2);
    out += R[5] * (sym_uuuw(m, m2) + sym_uuuw(m2, m));
    return out;
}

}  // namespace lcstat
