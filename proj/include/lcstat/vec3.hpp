#pragma once

#include <array>
#include <cmath>

namespace lcstat {

// 3-vector over an arbitrary scalar (double in production, exact rationals
// in the identity tests).
template <class S>
struct V3 {
    S x{}, y{}, z{};

    S operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend V3 operator+(const V3& a, const V3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend V3 operator-(const V3& a, const V3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend V3 operator*(const S& s, const V3& a) { return {s * a.x, s * a.y, s * a.z}; }
    friend V3 operator/(const V3& a, const S& s) { return {a.x / s, a.y / s, a.z / s}; }
    V3 operator-() const { return {-x, -y, -z}; }

    friend S dot(const V3& a, const V3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    friend V3 cross(const V3& a, const V3& b) {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }
    friend S norm2(const V3& a) { return dot(a, a); }
};

using Vec3 = V3<double>;

inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

// Dense 3x3 matrix; m(h, i) with h the row index.  Used for director
// gradients (row h = derivative direction) and rotations.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(int h, int i) { return m[h][i]; }
    double operator()(int h, int i) const { return m[h][i]; }

    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }

    Vec3 row(int h) const { return {m[h][0], m[h][1], m[h][2]}; }
    Vec3 col(int i) const { return {m[0][i], m[1][i], m[2][i]}; }

    friend Vec3 operator*(const Mat3& a, const Vec3& v) {
        return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
                a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
                a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
    }
    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m[j][i];
        return r;
    }
};

// Rotation from a unit quaternion (w, x, y, z); used by the randomized
// equivariance tests and the uniaxial constructors.
inline Mat3 rotation_from_quaternion(double w, double x, double y, double z) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n; x /= n; y /= n; z /= n;
    Mat3 r;
    r(0, 0) = 1 - 2 * (y * y + z * z); r(0, 1) = 2 * (x * y - w * z);     r(0, 2) = 2 * (x * z + w * y);
    r(1, 0) = 2 * (x * y + w * z);     r(1, 1) = 1 - 2 * (x * x + z * z); r(1, 2) = 2 * (y * z - w * x);
    r(2, 0) = 2 * (x * z - w * y);     r(2, 1) = 2 * (y * z + w * x);     r(2, 2) = 1 - 2 * (x * x + y * y);
    return r;
}

}  // namespace lcstat
