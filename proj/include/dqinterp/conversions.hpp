#pragma once

#include <array>
#include <cmath>
#include <string>

#include "dqinterp/algebra.hpp"

namespace dqinterp {

/// Decoupled rigid transform: rotate by `rotation`, then translate by `translation`.
template <std::floating_point T>
struct Pose {
    Quaternion<T> rotation = Quaternion<T>::identity();
    Vec3<T> translation{};

    static constexpr Pose identity() { return {}; }
    constexpr bool operator==(const Pose&) const = default;
};

/// Screw displacement: rotation `theta` about the line (axis_dir, axis_moment)
/// combined with translation `d` along it.
template <std::floating_point T>
struct ScrewParameters {
    T theta{0};
    T d{0};
    Vec3<T> axis_dir{1, 0, 0};
    Vec3<T> axis_moment{};
    /// Set by extraction when the rotation vanished and the axis was taken from the translation.
    bool pure_translation = false;

    /// The point on the axis closest to the origin.
    constexpr Vec3<T> axis_point() const { return cross(axis_dir, axis_moment); }
};

/// Row-major 4x4 rigid transform acting on column vectors (p' = M p).
template <std::floating_point T>
struct HomogeneousMatrix {
    std::array<std::array<T, 4>, 4> m{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

    constexpr std::array<T, 4>& operator[](std::size_t row) { return m[row]; }
    constexpr const std::array<T, 4>& operator[](std::size_t row) const { return m[row]; }

    constexpr HomogeneousMatrix operator*(const HomogeneousMatrix& o) const {
        HomogeneousMatrix r;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                T s = 0;
                for (std::size_t k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        }
        return r;
    }

    constexpr Vec3<T> apply(const Vec3<T>& p) const {
        return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z + m[0][3],
                m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z + m[1][3],
                m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z + m[2][3]};
    }
};

namespace detail {

template <std::floating_point T>
Quaternion<T> checked_rotation(const Quaternion<T>& q) {
    const T n = norm(q);
    if (!(std::abs(n - T(1)) <= T(tol::kUnitCheck))) {
        throw Error(ErrorKind::NotUnit, "pose rotation norm " + std::to_string(n) + " is not 1");
    }
    return q / n;
}

}  // namespace detail

/// real = q, dual = 1/2 (0, t) q.
template <std::floating_point T>
DualQuaternion<T> pose_to_dq(const Pose<T>& pose) {
    const Quaternion<T> q = detail::checked_rotation(pose.rotation);
    return {q, Quaternion<T>::pure(pose.translation) * q * T(0.5)};
}

/// Translation carried by a unit dual quaternion: vector part of 2 dual real*.
template <std::floating_point T>
Vec3<T> translation_of(const DualQuaternion<T>& q) {
    return (q.dual * conjugate(q.real)).vec() * T(2);
}

template <std::floating_point T>
Pose<T> dq_to_pose(const DualQuaternion<T>& q) {
    require_unit(q, "pose source");
    return {canonicalized(q.real), translation_of(q)};
}

template <std::floating_point T>
DualQuaternion<T> screw_to_dq(const ScrewParameters<T>& s) {
    const T dir_norm = norm(s.axis_dir);
    if (!(std::abs(dir_norm - T(1)) <= T(tol::kUnitCheck))) {
        throw Error(ErrorKind::InvalidAxis, "screw axis direction is not unit length");
    }
    if (!(std::abs(dot(s.axis_dir, s.axis_moment)) <= T(tol::kUnitCheck))) {
        throw Error(ErrorKind::InvalidAxis, "screw axis moment is not orthogonal to its direction");
    }
    const T half = s.theta / 2;
    const T sn = std::sin(half);
    const T cs = std::cos(half);
    return {{cs, s.axis_dir * sn},
            {-s.d / 2 * sn, s.axis_moment * sn + s.axis_dir * (s.d / 2 * cs)}};
}

namespace detail {

/// Screw extraction for the sign of q as given; theta lands in [0, 2 pi).
template <std::floating_point T>
ScrewParameters<T> screw_of(const DualQuaternion<T>& q) {
    const Vec3<T> vr = q.real.vec();
    const T sin_half = norm(vr);

    ScrewParameters<T> s;
    if (sin_half < T(tol::kAngle)) {
        const Vec3<T> t = translation_of(q);
        const T len = norm(t);
        s.pure_translation = true;
        s.d = len;
        if (len > 0) s.axis_dir = t / len;
        return s;
    }

    const T w_r = q.real.w;
    s.theta = 2 * std::atan2(sin_half, w_r);
    s.axis_dir = vr / sin_half;
    s.d = -2 * q.dual.w / sin_half;
    s.axis_moment = (q.dual.vec() - s.axis_dir * (s.d / 2 * w_r)) / sin_half;
    return s;
}

}  // namespace detail

/// Screw decomposition with theta in [0, pi]. When the rotation vanishes
/// (|vector part of real| < tol::kAngle) the translation defines the axis:
/// theta = 0, d = |t|, axis_dir = t/|t| (or +x for t = 0), moment = 0.
template <std::floating_point T>
ScrewParameters<T> dq_to_screw(const DualQuaternion<T>& q) {
    require_unit(q, "screw source");
    return detail::screw_of(canonicalized(q));
}

/// Moment of the line through `point` with direction `dir`: point x dir.
template <std::floating_point T>
constexpr Vec3<T> plucker_moment(const Vec3<T>& point, const Vec3<T>& dir) {
    return cross(point, dir);
}

template <std::floating_point T>
HomogeneousMatrix<T> dq_to_matrix(const DualQuaternion<T>& q) {
    require_unit(q, "matrix source");
    const Quaternion<T> r = normalized(q.real);
    const T w = r.w, x = r.x, y = r.y, z = r.z;
    const Vec3<T> t = translation_of(q);
    HomogeneousMatrix<T> m;
    m[0] = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y), t.x};
    m[1] = {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x), t.y};
    m[2] = {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y), t.z};
    m[3] = {0, 0, 0, 1};
    return m;
}

template <std::floating_point T>
DualQuaternion<T> matrix_to_dq(const HomogeneousMatrix<T>& m) {
    const T limit = T(tol::kUnitCheck);
    if (!(std::abs(m[3][0]) <= limit && std::abs(m[3][1]) <= limit && std::abs(m[3][2]) <= limit &&
          std::abs(m[3][3] - 1) <= limit)) {
        throw Error(ErrorKind::InvalidMatrix, "bottom row must be (0, 0, 0, 1)");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            T s = 0;
            for (std::size_t k = 0; k < 3; ++k) s += m[k][i] * m[k][j];
            if (!(std::abs(s - (i == j ? T(1) : T(0))) <= limit)) {
                throw Error(ErrorKind::InvalidMatrix, "rotation block is not orthonormal");
            }
        }
    }
    const T det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (!(std::abs(det - 1) <= limit)) {
        throw Error(ErrorKind::InvalidMatrix, "rotation block has determinant " + std::to_string(det));
    }

    // Shepperd: pivot on the largest of w^2, x^2, y^2, z^2.
    const T trace = m[0][0] + m[1][1] + m[2][2];
    Quaternion<T> q;
    if (trace >= m[0][0] && trace >= m[1][1] && trace >= m[2][2]) {
        const T s = std::sqrt(1 + trace) * 2;
        q = {s / 4, (m[2][1] - m[1][2]) / s, (m[0][2] - m[2][0]) / s, (m[1][0] - m[0][1]) / s};
    } else if (m[0][0] >= m[1][1] && m[0][0] >= m[2][2]) {
        const T s = std::sqrt(1 + m[0][0] - m[1][1] - m[2][2]) * 2;
        q = {(m[2][1] - m[1][2]) / s, s / 4, (m[0][1] + m[1][0]) / s, (m[0][2] + m[2][0]) / s};
    } else if (m[1][1] >= m[2][2]) {
        const T s = std::sqrt(1 + m[1][1] - m[0][0] - m[2][2]) * 2;
        q = {(m[0][2] - m[2][0]) / s, (m[0][1] + m[1][0]) / s, s / 4, (m[1][2] + m[2][1]) / s};
    } else {
        const T s = std::sqrt(1 + m[2][2] - m[0][0] - m[1][1]) * 2;
        q = {(m[1][0] - m[0][1]) / s, (m[0][2] + m[2][0]) / s, (m[1][2] + m[2][1]) / s, s / 4};
    }
    return pose_to_dq(Pose<T>{canonicalized(normalized(q)), {m[0][3], m[1][3], m[2][3]}});
}

using Posed = Pose<double>;
using ScrewParametersd = ScrewParameters<double>;
using HomogeneousMatrixd = HomogeneousMatrix<double>;

}  // namespace dqinterp
