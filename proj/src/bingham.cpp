#include "lcstat/bingham.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lcstat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRGuard = 200.0;

// Moments int_0^1 z^k exp(r z^2 - max(r,0)) dz for k = 0, 2, 4, 6.
struct AxialMoments {
    double i0, i2, i4, i6;
};

AxialMoments axial_moments_n(double r, int n) {
    const auto& gl = gauss_legendre(n);
    const double shift = std::max(r, 0.0);
    AxialMoments m{0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
        const double z = 0.5 * (gl.nodes[i] + 1.0);
        const double w = 0.5 * gl.weights[i];
        const double z2 = z * z;
        const double e = w * std::exp(r * z2 - shift);
        m.i0 += e;
        m.i2 += e * z2;
        m.i4 += e * z2 * z2;
        m.i6 += e * z2 * z2 * z2;
    }
    return m;
}

AxialMoments axial_moments(double r) {
    if (std::abs(r) > kRGuard) throw std::invalid_argument("bingham: |r| exceeds the overflow guard 200");
    AxialMoments prev = axial_moments_n(r, 32);
    for (int n = 64; n <= 1024; n *= 2) {
        const AxialMoments cur = axial_moments_n(r, n);
        const double scale = std::abs(cur.i0);
        if (std::abs(cur.i0 - prev.i0) < 1e-14 * scale && std::abs(cur.i2 - prev.i2) < 1e-14 * scale &&
            std::abs(cur.i4 - prev.i4) < 1e-14 * scale && std::abs(cur.i6 - prev.i6) < 1e-14 * scale)
            return cur;
        prev = cur;
    }
    return prev;
}

double s2_slope(const AxialMoments& m) {
    const double z2 = m.i2 / m.i0;
    const double z4 = m.i4 / m.i0;
    return 1.5 * (z4 - z2 * z2);
}

// Orthotropic weight moments in the eigenframe of B = diag(b1, b2, b3),
// normalized by the rescaled partition integral z0.
struct BiaxialMoments {
    double z0;  // int exp(B:mm - max b) dm
    double m11, m22;                    // <m1^2>, <m2^2>
    double m1111, m2222, m1122;         // <m1^4>, <m2^4>, <m1^2 m2^2>
    double m1133, m2233, m3333;         // <m1^2 m3^2>, <m2^2 m3^2>, <m3^4>
};

BiaxialMoments biaxial_moments_n(const std::array<double, 3>& b, int nz, int nphi) {
    const double bmax = std::max({b[0], b[1], b[2]});
    const auto& gl = gauss_legendre(nz);
    const double wphi = 2.0 * kPi / nphi;
    BiaxialMoments M{};
    for (int iz = 0; iz < nz; ++iz) {
        const double z = gl.nodes[iz];
        const double z2 = z * z;
        const double s2 = 1.0 - z2;
        const double base = b[2] * z2 - bmax;
        for (int ip = 0; ip < nphi; ++ip) {
            const double phi = wphi * ip;
            const double c = std::cos(phi), s = std::sin(phi);
            const double m1s = s2 * c * c;
            const double m2s = s2 * s * s;
            const double e = gl.weights[iz] * wphi * std::exp(base + b[0] * m1s + b[1] * m2s);
            M.z0 += e;
            M.m11 += e * m1s;
            M.m22 += e * m2s;
            M.m1111 += e * m1s * m1s;
            M.m2222 += e * m2s * m2s;
            M.m1122 += e * m1s * m2s;
            M.m1133 += e * m1s * z2;
            M.m2233 += e * m2s * z2;
            M.m3333 += e * z2 * z2;
        }
    }
    const double inv = 1.0 / M.z0;
    M.m11 *= inv; M.m22 *= inv;
    M.m1111 *= inv; M.m2222 *= inv; M.m1122 *= inv;
    M.m1133 *= inv; M.m2233 *= inv; M.m3333 *= inv;
    return M;
}

BiaxialMoments biaxial_moments(const std::array<double, 3>& b, int nz0, int nphi0) {
    int nz = std::max(nz0, 32), nphi = std::max(nphi0, 64);
    BiaxialMoments prev = biaxial_moments_n(b, nz, nphi);
    while (nz < 1024) {
        nz *= 2;
        nphi *= 2;
        const BiaxialMoments cur = biaxial_moments_n(b, nz, nphi);
        if (std::abs(cur.z0 - prev.z0) < 1e-13 * cur.z0 && std::abs(cur.m11 - prev.m11) < 1e-13 &&
            std::abs(cur.m22 - prev.m22) < 1e-13)
            return cur;
        prev = cur;
    }
    return prev;
}

SymTensor rotated_sym4(const SymTensor& T, const Mat3& R) {
    SymTensor out(4);
    for (int s = 0; s < out.size(); ++s) {
        const auto t = detail::counts_to_tuple(SymTensor::slot_counts(4, s));
        double sum = 0.0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d)
                        sum += R(t[0], a) * R(t[1], b) * R(t[2], c) * R(t[3], d) * T.comp(a, b, c, d);
        out[s] = sum;
    }
    return out;
}

}  // namespace

double QTensor::comp(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 0) return xx;
    if (i == 1 && j == 1) return yy;
    if (i == 2 && j == 2) return zz();
    if (i == 0 && j == 1) return xy;
    if (i == 0 && j == 2) return xz;
    return yz;
}

QTensor QTensor::from_matrix(const Mat3& M, double tol) {
    const double scale = 1.0 + std::abs(M(0, 0)) + std::abs(M(1, 1)) + std::abs(M(2, 2));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(M(i, j) - M(j, i)) > tol * scale)
                throw std::invalid_argument("QTensor: matrix is not symmetric");
    if (std::abs(M(0, 0) + M(1, 1) + M(2, 2)) > tol * scale)
        throw std::invalid_argument("QTensor: matrix is not traceless");
    return {M(0, 0), M(1, 1), 0.5 * (M(0, 1) + M(1, 0)), 0.5 * (M(0, 2) + M(2, 0)), 0.5 * (M(1, 2) + M(2, 1))};
}

QTensor QTensor::uniaxial(double S2, const Vec3& n) {
    if (std::abs(norm2(n) - 1.0) > 1e-12) throw std::invalid_argument("QTensor::uniaxial: n must be a unit vector");
    return {S2 * (n.x * n.x - 1.0 / 3.0), S2 * (n.y * n.y - 1.0 / 3.0), S2 * n.x * n.y, S2 * n.x * n.z,
            S2 * n.y * n.z};
}

Mat3 QTensor::matrix() const {
    Mat3 M;
    M(0, 0) = xx; M(1, 1) = yy; M(2, 2) = zz();
    M(0, 1) = M(1, 0) = xy;
    M(0, 2) = M(2, 0) = xz;
    M(1, 2) = M(2, 1) = yz;
    return M;
}

double QTensor::frobenius2() const {
    return xx * xx + yy * yy + zz() * zz() + 2.0 * (xy * xy + xz * xz + yz * yz);
}

void QTensor::eigen_system(std::array<double, 3>& vals, Mat3& vecs) const {
    Eigen::Matrix3d M;
    M << xx, xy, xz, xy, yy, yz, xz, yz, zz();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(M);
    for (int i = 0; i < 3; ++i) vals[i] = es.eigenvalues()(i);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) vecs(i, j) = es.eigenvectors()(i, j);
}

std::array<double, 3> QTensor::eigenvalues() const {
    std::array<double, 3> vals;
    Mat3 vecs;
    eigen_system(vals, vecs);
    return vals;
}

bool QTensor::is_physical() const {
    const auto vals = eigenvalues();
    return vals[0] > -1.0 / 3.0 + 1e-13 && vals[2] < 2.0 / 3.0 - 1e-13;
}

QTensor QTensor::rotated(const Mat3& R) const {
    const Mat3 M = R * matrix() * R.transposed();
    return {M(0, 0), M(1, 1), 0.5 * (M(0, 1) + M(1, 0)), 0.5 * (M(0, 2) + M(2, 0)), 0.5 * (M(1, 2) + M(2, 1))};
}

SymTensor QTensor::sym() const {
    SymTensor t(2);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) t.comp_ref(i, j) = comp(i, j);
    return t;
}

QTensor operator+(const QTensor& a, const QTensor& b) {
    return {a.xx + b.xx, a.yy + b.yy, a.xy + b.xy, a.xz + b.xz, a.yz + b.yz};
}

QTensor operator*(double f, const QTensor& a) { return {f * a.xx, f * a.yy, f * a.xy, f * a.xz, f * a.yz}; }

double qtensor_dot(const QTensor& a, const QTensor& b) {
    return a.xx * b.xx + a.yy * b.yy + a.zz() * b.zz() + 2.0 * (a.xy * b.xy + a.xz * b.xz + a.yz * b.yz);
}

double s2_from_r(double r) {
    const auto m = axial_moments(r);
    return 0.5 * (3.0 * m.i2 / m.i0 - 1.0);
}

double s4_from_r(double r) {
    const auto m = axial_moments(r);
    const double S2 = 0.5 * (3.0 * m.i2 / m.i0 - 1.0);
    return 35.0 / 8.0 * (m.i4 / m.i0) - 2.5 * S2 - 7.0 / 8.0;
}

double s4_via_p4(double r) {
    if (std::abs(r) > kRGuard) throw std::invalid_argument("bingham: |r| exceeds the overflow guard 200");
    const double shift = std::max(r, 0.0);
    auto avg = [&](int n) {
        const auto& gl = gauss_legendre(n);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            const double z = 0.5 * (gl.nodes[i] + 1.0);
            const double z2 = z * z;
            const double e = gl.weights[i] * std::exp(r * z2 - shift);
            num += e * ((35.0 * z2 * z2 - 30.0 * z2 + 3.0) / 8.0);
            den += e;
        }
        return num / den;
    };
    double prev = avg(32);
    for (int n = 64; n <= 1024; n *= 2) {
        const double cur = avg(n);
        if (std::abs(cur - prev) < 1e-14) return cur;
        prev = cur;
    }
    return prev;
}

double log_partition_axial(double r) {
    const auto m = axial_moments(r);
    return std::log(4.0 * kPi * m.i0) + std::max(r, 0.0);
}

double r_from_s2(double S2) {
    if (!(S2 > -0.5) || !(S2 < 1.0)) throw std::domain_error("r_from_s2: S2 must lie strictly inside (-1/2, 1)");
    static const double s2_lo = s2_from_r(-kRGuard);
    static const double s2_hi = s2_from_r(kRGuard);
    if (S2 <= s2_lo || S2 >= s2_hi) {
        std::ostringstream msg;
        msg << "r_from_s2: S2 = " << S2 << " unreachable within the |r| <= 200 guard; last bracket S2 in ["
            << s2_lo << ", " << s2_hi << "]";
        throw std::domain_error(msg.str());
    }
    double lo = -kRGuard, hi = kRGuard;
    double r = std::clamp(7.5 * S2, lo + 1.0, hi - 1.0);
    for (int it = 0; it < 100; ++it) {
        const auto m = axial_moments(r);
        const double f = 0.5 * (3.0 * m.i2 / m.i0 - 1.0) - S2;
        if (f > 0)
            hi = r;
        else
            lo = r;
        if (std::abs(f) < 1e-14) return r;
        const double step = f / s2_slope(m);
        double next = r - step;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - r) < 1e-13 * (1.0 + std::abs(r))) return next;
        r = next;
    }
    return r;
}

SphereQuadrature default_sphere_quadrature() { return build_sphere_quadrature(64, 128); }

BinghamSolution solve_bingham(const QTensor& Q, const SphereQuadrature& quad) {
    std::array<double, 3> q;
    Mat3 R;
    Q.eigen_system(q, R);
    if (!(q[0] > -1.0 / 3.0 + 1e-13) || !(q[2] < 2.0 / 3.0 - 1e-13))
        throw std::domain_error("solve_bingham: Q is not physical (eigenvalues must lie inside (-1/3, 2/3))");

    // Uniaxial seed from the top eigenvalue, plus a linear-response split of
    // the two minor eigenvalues.
    std::array<double, 3> b;
    {
        const double s2_seed = std::clamp(1.5 * q[2], -0.45, 0.985);
        const double r = r_from_s2(s2_seed);
        b = {-r / 3.0 + 7.5 * 0.5 * (q[0] - q[1]), -r / 3.0 + 7.5 * 0.5 * (q[1] - q[0]), 2.0 * r / 3.0};
    }

    const int nz0 = std::max(quad.n_z, 32), nphi0 = std::max(quad.n_phi, 64);
    BiaxialMoments M = biaxial_moments(b, nz0, nphi0);
    auto resid = [&](const BiaxialMoments& mm, double& f1, double& f2) {
        f1 = mm.m11 - 1.0 / 3.0 - q[0];
        f2 = mm.m22 - 1.0 / 3.0 - q[1];
    };
    double f1, f2;
    resid(M, f1, f2);
    bool converged = false;
    for (int it = 0; it < 80 && !converged; ++it) {
        if (std::max(std::abs(f1), std::abs(f2)) < 1e-12) {
            converged = true;
            break;
        }
        // Jacobian of <m_i^2> w.r.t. (b1, b2) with b3 = -b1-b2:
        // d<m_i^2>/db_j = Cov(m_i^2, m_j^2 - m_3^2).
        const double m33 = 1.0 - M.m11 - M.m22;
        const double c11 = M.m1111 - M.m11 * M.m11;
        const double c12 = M.m1122 - M.m11 * M.m22;
        const double c22 = M.m2222 - M.m22 * M.m22;
        const double c13 = M.m1133 - M.m11 * m33;
        const double c23 = M.m2233 - M.m22 * m33;
        const double J11 = c11 - c13, J12 = c12 - c13;
        const double J21 = c12 - c23, J22 = c22 - c23;
        const double det = J11 * J22 - J12 * J21;
        if (std::abs(det) < 1e-300) throw std::runtime_error("solve_bingham: singular Newton system");
        double db1 = -(J22 * f1 - J12 * f2) / det;
        double db2 = -(-J21 * f1 + J11 * f2) / det;

        const double n0 = std::hypot(f1, f2);
        bool accepted = false;
        for (int halve = 0; halve < 30; ++halve) {
            const std::array<double, 3> bt = {b[0] + db1, b[1] + db2, -(b[0] + db1) - (b[1] + db2)};
            if (std::max({std::abs(bt[0]), std::abs(bt[1]), std::abs(bt[2])}) > 2.0 * kRGuard) {
                db1 *= 0.5;
                db2 *= 0.5;
                continue;
            }
            const BiaxialMoments Mt = biaxial_moments(bt, nz0, nphi0);
            double g1, g2;
            resid(Mt, g1, g2);
            if (std::hypot(g1, g2) < n0) {
                b = bt;
                M = Mt;
                f1 = g1;
                f2 = g2;
                accepted = true;
                break;
            }
            db1 *= 0.5;
            db2 *= 0.5;
        }
        if (!accepted) break;
    }
    const double res = std::max(std::abs(f1), std::abs(f2));
    if (!(res < 1e-10)) {
        std::ostringstream msg;
        msg << "solve_bingham: Newton stagnation, moment residual " << res;
        throw std::runtime_error(msg.str());
    }

    BinghamSolution sol;
    const Mat3 Bd = [&] {
        Mat3 D;
        D(0, 0) = b[0]; D(1, 1) = b[1]; D(2, 2) = b[2];
        return R * D * R.transposed();
    }();
    sol.B = {Bd(0, 0), Bd(1, 1), Bd(0, 1), Bd(0, 2), Bd(1, 2)};
    sol.Z = M.z0 * std::exp(std::max({b[0], b[1], b[2]}));
    sol.residual = res;
    return sol;
}

BinghamSolution solve_bingham(const QTensor& Q) { return solve_bingham(Q, default_sphere_quadrature()); }

SymTensor q4_from_bingham(const BinghamSolution& sol, const SphereQuadrature& quad) {
    std::array<double, 3> b;
    Mat3 R;
    sol.B.eigen_system(b, R);
    const BiaxialMoments M = biaxial_moments(b, std::max(quad.n_z, 32), std::max(quad.n_phi, 64));

    // Frame moments are orthotropic: only even-power components survive.
    SymTensor m4(4);
    m4.comp_ref(0, 0, 0, 0) = M.m1111;
    m4.comp_ref(1, 1, 1, 1) = M.m2222;
    m4.comp_ref(2, 2, 2, 2) = M.m3333;
    m4.comp_ref(0, 0, 1, 1) = M.m1122;
    m4.comp_ref(0, 0, 2, 2) = M.m1133;
    m4.comp_ref(1, 1, 2, 2) = M.m2233;

    SymTensor m2(2);
    m2.comp_ref(0, 0) = M.m11;
    m2.comp_ref(1, 1) = M.m22;
    m2.comp_ref(2, 2) = 1.0 - M.m11 - M.m22;

    SymTensor q4 = m4;
    q4 -= (1.0 / 7.0) * sym_delta_t2(m2);
    q4 += (1.0 / 35.0) * sigma_tensor(Vec3{0, 0, 1}, 0, 2);
    return rotated_sym4(q4, R);
}

SymTensor q4_from_bingham(const BinghamSolution& sol) { return q4_from_bingham(sol, default_sphere_quadrature()); }

double bingham_entropy(double c, const QTensor& Q) {
    if (!(c > 0.0)) throw std::invalid_argument("bingham_entropy: c must be positive");
    const BinghamSolution sol = solve_bingham(Q);
    return c * (std::log(c) + qtensor_dot(Q, sol.B) - std::log(sol.Z));
}

BinghamTable::BinghamTable(double r_min, double r_max, int n_knots) : r_min_(r_min), r_max_(r_max) {
    const double h = (r_max - r_min) / (n_knots - 1);
    std::vector<double> s2v(n_knots), s4v(n_knots);
    double ds2_first = 0, ds2_last = 0, ds4_first = 0, ds4_last = 0;
    for (int i = 0; i < n_knots; ++i) {
        const double r = r_min + h * i;
        const auto m = axial_moments(r);
        const double z2 = m.i2 / m.i0, z4 = m.i4 / m.i0, z6 = m.i6 / m.i0;
        s2v[i] = 0.5 * (3.0 * z2 - 1.0);
        s4v[i] = 35.0 / 8.0 * z4 - 2.5 * s2v[i] - 7.0 / 8.0;
        if (i == 0 || i == n_knots - 1) {
            const double ds2 = 1.5 * (z4 - z2 * z2);
            const double ds4 = 35.0 / 8.0 * (z6 - z4 * z2) - 2.5 * ds2;
            (i == 0 ? ds2_first : ds2_last) = ds2;
            (i == 0 ? ds4_first : ds4_last) = ds4;
        }
    }
    s2_ = UniformCubicSpline(r_min, h, s2v, ds2_first, ds2_last);
    s4_ = UniformCubicSpline(r_min, h, s4v, ds4_first, ds4_last);
    s2_knots_ = std::move(s2v);
    s2_lo_ = s2_knots_.front();
    s2_hi_ = s2_knots_.back();
    lnz_at_rmin_ = log_partition_axial(r_min);
}

const BinghamTable& BinghamTable::instance() {
    static const BinghamTable table(-100.0, 200.0, 12001);
    return table;
}

double BinghamTable::s2(double r) const { return s2_.eval(r); }
double BinghamTable::ds2_dr(double r) const { return s2_.deriv(r); }
double BinghamTable::s4(double r) const { return s4_.eval(r); }
double BinghamTable::ds4_dr(double r) const { return s4_.deriv(r); }

double BinghamTable::log_partition(double r) const {
    return lnz_at_rmin_ + (2.0 * s2_.integral(r) + (r - r_min_)) / 3.0;
}

double BinghamTable::r_from_s2(double S2) const {
    if (!(S2 > s2_lo_) || !(S2 < s2_hi_))
        throw std::domain_error("BinghamTable::r_from_s2: S2 outside the tabulated range");
    const auto it = std::lower_bound(s2_knots_.begin(), s2_knots_.end(), S2);
    const int j = std::clamp(static_cast<int>(it - s2_knots_.begin()), 1, static_cast<int>(s2_knots_.size()) - 1);
    const double h = (r_max_ - r_min_) / (static_cast<double>(s2_knots_.size()) - 1.0);
    const double frac = (S2 - s2_knots_[j - 1]) / (s2_knots_[j] - s2_knots_[j - 1]);
    double r = r_min_ + h * (j - 1 + frac);
    for (int it2 = 0; it2 < 6; ++it2) {
        const double f = s2_.eval(r) - S2;
        if (std::abs(f) < 1e-15) break;
        r = std::clamp(r - f / s2_.deriv(r), r_min_, r_max_);
    }
    return r;
}

}  // namespace lcstat
