#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace ssdf {

template <typename T>
struct Vec3T {
    T x = 0, y = 0, z = 0;

    Vec3T() = default;
    Vec3T(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

    T& operator[](int i) { return (&x)[i]; }
    T operator[](int i) const { return (&x)[i]; }

    Vec3T operator+(const Vec3T& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3T operator-(const Vec3T& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3T operator-() const { return {-x, -y, -z}; }
    Vec3T operator*(T s) const { return {x * s, y * s, z * s}; }
    Vec3T operator/(T s) const { return {x / s, y / s, z / s}; }
    Vec3T& operator+=(const Vec3T& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3T& operator-=(const Vec3T& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3T& operator*=(T s) { x *= s; y *= s; z *= s; return *this; }

    friend Vec3T operator*(T s, const Vec3T& v) { return v * s; }

    template <typename U>
    Vec3T<U> cast() const { return {static_cast<U>(x), static_cast<U>(y), static_cast<U>(z)}; }
};

template <typename T> inline T dot(const Vec3T<T>& a, const Vec3T<T>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
template <typename T> inline Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
template <typename T> inline T length_squared(const Vec3T<T>& v) { return dot(v, v); }
template <typename T> inline T length(const Vec3T<T>& v) { return std::sqrt(dot(v, v)); }
template <typename T> inline Vec3T<T> normalized(const Vec3T<T>& v) {
    T len = length(v);
    return len > 0 ? v / len : v;
}
template <typename T> inline Vec3T<T> min(const Vec3T<T>& a, const Vec3T<T>& b) {
    return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}
template <typename T> inline Vec3T<T> max(const Vec3T<T>& a, const Vec3T<T>& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}

using Vec3  = Vec3T<float>;
using Vec3d = Vec3T<double>;

// Column-vector convention: v' = M v.
struct Mat3 {
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    static Mat3 identity() { return Mat3{}; }

    static Mat3 axis_angle(const Vec3d& axis, double radians) {
        // Rodrigues rotation about a unit axis.
        const double c = std::cos(radians), s = std::sin(radians), t = 1.0 - c;
        const double ax = axis.x, ay = axis.y, az = axis.z;
        Mat3 r;
        r.m[0][0] = t * ax * ax + c;
        r.m[0][1] = t * ax * ay - s * az;
        r.m[0][2] = t * ax * az + s * ay;
        r.m[1][0] = t * ax * ay + s * az;
        r.m[1][1] = t * ay * ay + c;
        r.m[1][2] = t * ay * az - s * ax;
        r.m[2][0] = t * ax * az - s * ay;
        r.m[2][1] = t * ay * az + s * ax;
        r.m[2][2] = t * az * az + c;
        return r;
    }

    Vec3d operator*(const Vec3d& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[j][i];
        return r;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
};

// x' = R x + t, with R orthonormal and det +1.
struct RigidTransform {
    Mat3 rotation;
    Vec3d translation;

    static RigidTransform identity() { return {}; }

    Vec3d apply(const Vec3d& x) const { return rotation * x + translation; }
    Vec3 apply(const Vec3& x) const { return apply(x.cast<double>()).cast<float>(); }

    // this ∘ other: apply `other` first.
    RigidTransform compose(const RigidTransform& other) const {
        return {rotation * other.rotation, rotation * other.translation + translation};
    }

    RigidTransform inverse() const {
        Mat3 rt = rotation.transposed();
        return {rt, -(rt * translation)};
    }

    // Max deviation of R^T R from the identity plus |det - 1|.
    double rigidity_error() const {
        Mat3 rtr = rotation.transposed() * rotation;
        double e = std::abs(rotation.det() - 1.0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                e = std::max(e, std::abs(rtr.m[i][j] - (i == j ? 1.0 : 0.0)));
        return e;
    }
};

inline double degrees_to_radians(double deg) { return deg * (3.14159265358979323846 / 180.0); }
inline double radians_to_degrees(double rad) { return rad * (180.0 / 3.14159265358979323846); }

} // namespace ssdf
