#pragma once

// Rigid-transform interpolation between two unit dual quaternions.
//
//   sep_lerp  translation and rotation extracted and interpolated separately
//   dlb       normalized 8-component linear blend
//   sclerp    screw motion: a (a^-1 b)^t
//   kenlerp   beta-weighted blend of the sep_lerp (beta = 0) and sclerp (beta = 1)
//             poses; beta > 1 extrapolates past the coupled response
//
// Every pairwise interpolant first negates b when the real parts point into
// opposite hemispheres so the short way around is taken.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dqinterp/algebra.hpp"
#include "dqinterp/conversions.hpp"

namespace dqinterp {

/// Signals raised while interpolating. None of them abort the computation.
struct Diagnostics {
    /// The two rotations were half a turn apart, so the geodesic direction was
    /// chosen by the fixed tie-break rule rather than by the data.
    bool antipodal_ambiguity = false;
};

enum class MethodKind { Sep, Dlb, Sclerp, Kenlerp };

inline constexpr double kDefaultBetaMax = 4.0;

struct InterpolationMethod {
    MethodKind kind = MethodKind::Sclerp;
    /// Only read for Kenlerp.
    double beta = 0.0;
    double beta_max = kDefaultBetaMax;

    static constexpr InterpolationMethod sep() { return {MethodKind::Sep}; }
    static constexpr InterpolationMethod dlb() { return {MethodKind::Dlb}; }
    static constexpr InterpolationMethod sclerp() { return {MethodKind::Sclerp}; }
    static constexpr InterpolationMethod kenlerp(double beta, double beta_max = kDefaultBetaMax) {
        return {MethodKind::Kenlerp, beta, beta_max};
    }
};

constexpr std::string_view to_string(MethodKind kind) noexcept {
    switch (kind) {
        case MethodKind::Sep: return "sep";
        case MethodKind::Dlb: return "dlb";
        case MethodKind::Sclerp: return "sclerp";
        case MethodKind::Kenlerp: return "kenlerp";
    }
    return "unknown";
}

inline std::optional<MethodKind> parse_method(std::string_view name) {
    for (MethodKind k : {MethodKind::Sep, MethodKind::Dlb, MethodKind::Sclerp, MethodKind::Kenlerp}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

template <std::floating_point T>
constexpr Vec3<T> lerp_vec(T t, const Vec3<T>& v0, const Vec3<T>& v1) {
    return v0 * (1 - t) + v1 * t;
}

/// Rotation by t times the angle of q about the axis of q. No sign
/// canonicalization is applied, so q^1 == q.
template <std::floating_point T>
Quaternion<T> quat_pow(const Quaternion<T>& q, T t) {
    const Vec3<T> v = q.vec();
    const T sin_half = norm(v);
    if (sin_half < T(tol::kAngle)) {
        // Axis-free small-angle limit; -1 has no axis and is treated as +1.
        const Quaternion<T> c = q.w < 0 ? -q : q;
        const T half = std::atan2(sin_half, c.w);
        return {std::cos(t * half), c.vec() * t};
    }
    const T half = std::atan2(sin_half, q.w);
    return {std::cos(t * half), v * (std::sin(t * half) / sin_half)};
}

namespace detail {

/// Fixed tie-break direction for half-turn rotation pairs: the part of +x
/// orthogonal to q0's rotation axis, or of +y when +x is (nearly) along it.
template <std::floating_point T>
Vec3<T> antipodal_reference(const Quaternion<T>& q0) {
    const Vec3<T> axis = q0.vec();
    const T len = norm(axis);
    const Vec3<T> ex{1, 0, 0};
    if (len < T(tol::kAngle)) return ex;
    const Vec3<T> u = axis / len;
    Vec3<T> ref = ex - u * dot(ex, u);
    if (norm(ref) < T(1e-6)) {
        const Vec3<T> ey{0, 1, 0};
        ref = ey - u * dot(ey, u);
    }
    return ref / norm(ref);
}

/// True when q1 must be negated for the short geodesic from q0.
template <std::floating_point T>
bool needs_shortest_path_flip(const Quaternion<T>& q0, const Quaternion<T>& q1, Diagnostics* diag) {
    const T d = dot(q0, q1);
    if (d < -T(tol::kAngle)) return true;
    if (d > T(tol::kAngle)) return false;

    // Half-turn apart: both directions are equally short. Orient the relative
    // rotation axis along the reference so the result is independent of the
    // input signs.
    if (diag) diag->antipodal_ambiguity = true;
    const Vec3<T> n = (conjugate(q0) * q1).vec();
    T key = dot(n, antipodal_reference(q0));
    if (std::abs(key) < T(1e-12)) {
        for (T c : {n.x, n.y, n.z}) {
            if (std::abs(c) >= T(1e-12)) {
                key = c;
                break;
            }
        }
    }
    return key < 0;
}

/// cos(t theta_hat / 2) + v_hat sin(t theta_hat / 2) with dual angle theta + eps d.
template <std::floating_point T>
DualQuaternion<T> power_from_screw(const ScrewParameters<T>& s, T t) {
    const DualNumber<T> half_angle{t * s.theta / 2, t * s.d / 2};
    const DualVector<T> axis{s.axis_dir, s.axis_moment};
    return DualQuaternion<T>::from_scalar_vector(dual_cos(half_angle), axis * dual_sin(half_angle));
}

template <std::floating_point T>
DualQuaternion<T> aligned_end(const DualQuaternion<T>& a, const DualQuaternion<T>& b, Diagnostics* diag) {
    return needs_shortest_path_flip(a.real, b.real, diag) ? -b : b;
}

}  // namespace detail

template <std::floating_point T>
Quaternion<T> slerp(T t, const Quaternion<T>& q0, const Quaternion<T>& q1, Diagnostics* diag = nullptr) {
    const Quaternion<T> end = detail::needs_shortest_path_flip(q0, q1, diag) ? -q1 : q1;
    return q0 * quat_pow(conjugate(q0) * end, t);
}

/// Unit dual quaternion raised to the real power t along its screw motion.
template <std::floating_point T>
DualQuaternion<T> dq_pow(const DualQuaternion<T>& q, T t) {
    return detail::power_from_screw(dq_to_screw(q), t);
}

template <std::floating_point T>
DualQuaternion<T> sep_lerp(T t, const DualQuaternion<T>& a, const DualQuaternion<T>& b,
                           Diagnostics* diag = nullptr) {
    const Pose<T> pa = dq_to_pose(a);
    const Pose<T> pb = dq_to_pose(b);
    return pose_to_dq(Pose<T>{slerp(t, pa.rotation, pb.rotation, diag),
                              lerp_vec(t, pa.translation, pb.translation)});
}

template <std::floating_point T>
DualQuaternion<T> dlb(T t, const DualQuaternion<T>& a, const DualQuaternion<T>& b, Diagnostics* diag = nullptr) {
    require_unit(a, "dlb start");
    require_unit(b, "dlb end");
    const DualQuaternion<T> blend = a * (1 - t) + detail::aligned_end(a, b, diag) * t;
    if (norm(blend.real) < T(tol::kAngle)) {
        throw Error(ErrorKind::DegenerateBlend, "blended real part vanished");
    }
    return normalized(blend);
}

template <std::floating_point T>
DualQuaternion<T> sclerp(T t, const DualQuaternion<T>& a, const DualQuaternion<T>& b,
                         Diagnostics* diag = nullptr) {
    require_unit(a, "sclerp start");
    require_unit(b, "sclerp end");
    const DualQuaternion<T> relative = inverse(a) * detail::aligned_end(a, b, diag);
    return a * detail::power_from_screw(detail::screw_of(relative), t);
}

template <std::floating_point T>
DualQuaternion<T> kenlerp(T t, T beta, const DualQuaternion<T>& a, const DualQuaternion<T>& b,
                          T beta_max = T(kDefaultBetaMax), Diagnostics* diag = nullptr) {
    if (!(beta >= 0 && beta <= beta_max)) {
        throw Error(ErrorKind::BetaOutOfRange,
                    "beta " + std::to_string(beta) + " outside [0, " + std::to_string(beta_max) + "]");
    }
    const Pose<T> coupled = dq_to_pose(sclerp(t, a, b, diag));
    const Pose<T> decoupled = dq_to_pose(sep_lerp(t, a, b, diag));
    return pose_to_dq(Pose<T>{slerp(beta, decoupled.rotation, coupled.rotation, diag),
                              lerp_vec(beta, decoupled.translation, coupled.translation)});
}

template <std::floating_point T>
DualQuaternion<T> interpolate(const InterpolationMethod& method, T t, const DualQuaternion<T>& a,
                              const DualQuaternion<T>& b, Diagnostics* diag = nullptr) {
    switch (method.kind) {
        case MethodKind::Sep: return sep_lerp(t, a, b, diag);
        case MethodKind::Dlb: return dlb(t, a, b, diag);
        case MethodKind::Kenlerp: return kenlerp(t, T(method.beta), a, b, T(method.beta_max), diag);
        case MethodKind::Sclerp: break;
    }
    return sclerp(t, a, b, diag);
}

// ---------------------------------------------------------------------------
// Trajectories
// ---------------------------------------------------------------------------

template <std::floating_point T>
struct TrajectorySample {
    T t{0};
    Pose<T> pose{};
    DualQuaternion<T> dq{};
};

template <std::floating_point T>
struct TrajectoryMetrics {
    T path_length{0};
    T total_rotation{0};
    T max_linear_step{0};
    T max_angular_step{0};
};

/// Samples at t_i = i / (n - 1). Samples are independent of each other, so any
/// t shared by two sample counts yields the same pose.
template <std::floating_point T>
std::vector<TrajectorySample<T>> sample_trajectory(const InterpolationMethod& method, const DualQuaternion<T>& a,
                                                   const DualQuaternion<T>& b, std::size_t n,
                                                   Diagnostics* diag = nullptr) {
    if (n < 2) throw Error(ErrorKind::InvalidCount, "a trajectory needs at least 2 samples");
    std::vector<TrajectorySample<T>> out;
    out.reserve(n);
    const T last = T(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const T t = T(i) / last;
        const DualQuaternion<T> dq = interpolate(method, t, a, b, diag);
        out.push_back({t, dq_to_pose(dq), dq});
    }
    return out;
}

/// Angle of the rotation taking q0 to q1, ignoring quaternion sign.
template <std::floating_point T>
T rotation_angle_between(const Quaternion<T>& q0, const Quaternion<T>& q1) {
    const Quaternion<T> rel = conjugate(q0) * q1;
    return 2 * std::atan2(norm(rel.vec()), std::abs(rel.w));
}

template <std::floating_point T>
TrajectoryMetrics<T> trajectory_metrics(const std::vector<TrajectorySample<T>>& samples) {
    if (samples.size() < 2) throw Error(ErrorKind::InvalidCount, "metrics need at least 2 samples");
    TrajectoryMetrics<T> m;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const T linear = norm(samples[i].pose.translation - samples[i - 1].pose.translation);
        const T angular = rotation_angle_between(samples[i - 1].pose.rotation, samples[i].pose.rotation);
        m.path_length += linear;
        m.total_rotation += angular;
        m.max_linear_step = std::max(m.max_linear_step, linear);
        m.max_angular_step = std::max(m.max_angular_step, angular);
    }
    return m;
}

using TrajectorySampled = TrajectorySample<double>;
using TrajectoryMetricsd = TrajectoryMetrics<double>;

}  // namespace dqinterp
