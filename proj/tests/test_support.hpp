#pragma once

// Shared generators and independent reference computations for the test
// suites. Nothing here calls into the dual-quaternion code paths under test:
// rotations are built from axis-angle pairs and checked with plain 3x3 / 4x4
// matrix arithmetic.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "dqinterp/dqinterp.hpp"

namespace dqtest {

using namespace dqinterp;

using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat4 = std::array<std::array<double, 4>, 4>;

inline constexpr double kPi = std::numbers::pi;

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }

    Vec3d unit_vector() {
        std::normal_distribution<double> g;
        for (;;) {
            Vec3d v{g(engine), g(engine), g(engine)};
            const double n = norm(v);
            if (n > 1e-6) return v / n;
        }
    }

    Vec3d vector(double scale) { return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }

    /// Uniformly random rotation, returned with a random sign (both covers).
    Quaterniond rotation() {
        std::normal_distribution<double> g;
        for (;;) {
            Quaterniond q{g(engine), g(engine), g(engine), g(engine)};
            const double n = norm(q);
            if (n > 1e-6) return q / n;
        }
    }

    Posed pose(double scale = 10.0) { return {rotation(), vector(scale)}; }
};

/// q = cos(angle/2) + sin(angle/2) axis.
inline Quaterniond axis_angle(const Vec3d& axis, double angle) {
    return {std::cos(angle / 2), axis * std::sin(angle / 2)};
}

/// Rodrigues: R = I + sin(a) K + (1 - cos(a)) K^2 for unit axis k.
inline Mat3 rodrigues(const Vec3d& k, double a) {
    const Mat3 K{{{0, -k.z, k.y}, {k.z, 0, -k.x}, {-k.y, k.x, 0}}};
    Mat3 R{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double k2 = 0;
            for (int m = 0; m < 3; ++m) k2 += K[i][m] * K[m][j];
            R[i][j] = (i == j ? 1.0 : 0.0) + std::sin(a) * K[i][j] + (1 - std::cos(a)) * k2;
        }
    }
    return R;
}

/// Rotation matrix of a unit quaternion via the axis-angle it encodes.
inline Mat3 rotation_matrix(const Quaterniond& q) {
    const Vec3d v{q.x, q.y, q.z};
    const double s = norm(v);
    if (s == 0) return rodrigues({1, 0, 0}, 0);
    return rodrigues(v / s, 2 * std::atan2(s, q.w));
}

inline Vec3d mat_apply(const Mat3& R, const Vec3d& p) {
    return {R[0][0] * p.x + R[0][1] * p.y + R[0][2] * p.z, R[1][0] * p.x + R[1][1] * p.y + R[1][2] * p.z,
            R[2][0] * p.x + R[2][1] * p.y + R[2][2] * p.z};
}

inline Mat3 multiply(const Mat3& A, const Mat3& B) {
    Mat3 C{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) C[i][j] += A[i][k] * B[k][j];
    return C;
}

inline Mat3 transpose(const Mat3& A) {
    Mat3 T{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T[i][j] = A[j][i];
    return T;
}

/// Axis and angle in [0, pi] from a rotation matrix (angle away from 0 and pi).
inline std::pair<Vec3d, double> matrix_log(const Mat3& R) {
    const double c = std::clamp((R[0][0] + R[1][1] + R[2][2] - 1) / 2, -1.0, 1.0);
    const Vec3d w{R[2][1] - R[1][2], R[0][2] - R[2][0], R[1][0] - R[0][1]};
    const double angle = std::atan2(norm(w) / 2, c);
    return {w / norm(w), angle};
}

inline Mat4 homogeneous(const Mat3& R, const Vec3d& t) {
    return {{{R[0][0], R[0][1], R[0][2], t.x},
             {R[1][0], R[1][1], R[1][2], t.y},
             {R[2][0], R[2][1], R[2][2], t.z},
             {0, 0, 0, 1}}};
}

/// Inverse of a rigid homogeneous matrix: [R^T, -R^T t].
inline Mat4 rigid_inverse(const Mat4& M) {
    Mat3 R{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) R[i][j] = M[j][i];
    const Vec3d t = mat_apply(R, {M[0][3], M[1][3], M[2][3]});
    return homogeneous(R, -t);
}

inline double max_abs_diff(const Mat4& A, const HomogeneousMatrixd& B) {
    double e = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) e = std::max(e, std::abs(A[i][j] - B[i][j]));
    return e;
}

inline Mat4 to_mat4(const HomogeneousMatrixd& M) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = M[i][j];
    return out;
}

inline Mat4 multiply(const Mat4& A, const Mat4& B) {
    Mat4 C{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) C[i][j] += A[i][k] * B[k][j];
    return C;
}

/// Homogeneous matrix of a pose computed without quaternion products.
inline Mat4 pose_matrix(const Posed& p) { return homogeneous(rotation_matrix(p.rotation), p.translation); }

/// Left-multiplication matrix: L(a) b == a * b as 4-vectors (w, x, y, z).
inline std::array<double, 4> left_multiply(const Quaterniond& a, const Quaterniond& b) {
    const double L[4][4] = {
        {a.w, -a.x, -a.y, -a.z}, {a.x, a.w, -a.z, a.y}, {a.y, a.z, a.w, -a.x}, {a.z, -a.y, a.x, a.w}};
    const double v[4] = {b.w, b.x, b.y, b.z};
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += L[i][j] * v[j];
    return r;
}

inline std::array<double, 8> flat(const DualQuaterniond& q) {
    return {q.real.w, q.real.x, q.real.y, q.real.z, q.dual.w, q.dual.x, q.dual.y, q.dual.z};
}

inline double max_abs_diff(const DualQuaterniond& a, const DualQuaterniond& b) {
    const auto fa = flat(a), fb = flat(b);
    double e = 0;
    for (int i = 0; i < 8; ++i) e = std::max(e, std::abs(fa[i] - fb[i]));
    return e;
}

/// Componentwise distance between two encodings of the same transform, sign-insensitive.
inline double transform_distance(const DualQuaterniond& a, const DualQuaterniond& b) {
    return std::min(max_abs_diff(a, b), max_abs_diff(a, -b));
}

inline double max_abs_diff(const Vec3d& a, const Vec3d& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double max_abs_diff(const Quaterniond& a, const Quaterniond& b) {
    return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double rotation_distance(const Quaterniond& a, const Quaterniond& b) {
    return std::min(max_abs_diff(a, b), max_abs_diff(a, -b));
}

/// Random unit dual quaternion with screw angle drawn from [theta_lo, theta_hi].
inline DualQuaterniond random_screw_dq(Rng& rng, double theta_lo, double theta_hi, double scale = 5.0) {
    const Vec3d l = rng.unit_vector();
    const Vec3d p = rng.vector(scale);
    const double theta = rng.uniform(theta_lo, theta_hi);
    const double d = rng.uniform(-scale, scale);
    // Built from the rotate-about-a-line construction: x -> R (x - p) + p + d l.
    const Quaterniond q = axis_angle(l, theta);
    const Vec3d t = p - mat_apply(rotation_matrix(q), p) + l * d;
    return pose_to_dq(Posed{q, t});
}

}  // namespace dqtest
