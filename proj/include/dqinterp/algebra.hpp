#pragma once

// Quaternion, dual-number and dual-quaternion value types.
//
// Conventions:
//   * Quaternions are stored (w, x, y, z) and multiply by the Hamilton product.
//   * A dual quaternion is real + eps * dual with eps^2 = 0.
//   * A unit dual quaternion encoding rotation q and translation t has
//     real = q and dual = 1/2 * (0, t) * q, so composition a * b applies b first.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>

#include "dqinterp/error.hpp"

namespace dqinterp {

namespace tol {
/// Deviation tolerated by operations that require unit inputs.
inline constexpr double kUnitCheck = 1e-6;
/// Target accuracy of the unit invariants on produced values.
inline constexpr double kUnit = 1e-9;
/// Below this real-part norm the dual part of the norm is undefined.
inline constexpr double kZeroRealPart = 1e-12;
/// Rotation (|vector part| of the real quaternion) treated as zero.
inline constexpr double kAngle = 1e-9;
}  // namespace tol

template <std::floating_point T>
struct Vec3 {
    T x{0}, y{0}, z{0};

    constexpr Vec3() = default;
    constexpr Vec3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

    static constexpr Vec3 zero() { return {}; }

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(T s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(T s) const { return {x / s, y / s, z / s}; }
    friend constexpr Vec3 operator*(T s, const Vec3& v) { return v * s; }

    constexpr bool operator==(const Vec3&) const = default;
};

template <std::floating_point T>
constexpr T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <std::floating_point T>
constexpr Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <std::floating_point T>
T norm(const Vec3<T>& v) {
    return std::sqrt(dot(v, v));
}

template <std::floating_point T>
struct Quaternion {
    T w{0}, x{0}, y{0}, z{0};

    constexpr Quaternion() = default;
    constexpr Quaternion(T w_, T x_, T y_, T z_) : w(w_), x(x_), y(y_), z(z_) {}
    constexpr Quaternion(T w_, const Vec3<T>& v) : w(w_), x(v.x), y(v.y), z(v.z) {}

    static constexpr Quaternion identity() { return {1, 0, 0, 0}; }
    /// Pure quaternion (w = 0) carrying a 3-vector.
    static constexpr Quaternion pure(const Vec3<T>& v) { return {0, v}; }

    constexpr Vec3<T> vec() const { return {x, y, z}; }

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion operator*(T s) const { return {w * s, x * s, y * s, z * s}; }
    constexpr Quaternion operator/(T s) const { return {w / s, x / s, y / s, z / s}; }
    friend constexpr Quaternion operator*(T s, const Quaternion& q) { return q * s; }

    // Hamilton product.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    constexpr bool operator==(const Quaternion&) const = default;
};

template <std::floating_point T>
constexpr Quaternion<T> conjugate(const Quaternion<T>& q) {
    return {q.w, -q.x, -q.y, -q.z};
}

template <std::floating_point T>
constexpr T dot(const Quaternion<T>& a, const Quaternion<T>& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

template <std::floating_point T>
T norm(const Quaternion<T>& q) {
    return std::sqrt(dot(q, q));
}

template <std::floating_point T>
Quaternion<T> normalized(const Quaternion<T>& q) {
    return q / norm(q);
}

/// Sign representative of q with w >= 0; ties broken by the first nonzero of x, y, z.
template <std::floating_point T>
constexpr bool needs_sign_flip(const Quaternion<T>& q) {
    if (q.w != 0) return q.w < 0;
    if (q.x != 0) return q.x < 0;
    if (q.y != 0) return q.y < 0;
    return q.z < 0;
}

template <std::floating_point T>
constexpr Quaternion<T> canonicalized(const Quaternion<T>& q) {
    return needs_sign_flip(q) ? -q : q;
}

/// Rotates v by the unit quaternion q (q v q*).
template <std::floating_point T>
constexpr Vec3<T> rotate(const Quaternion<T>& q, const Vec3<T>& v) {
    return (q * Quaternion<T>::pure(v) * conjugate(q)).vec();
}

// ---------------------------------------------------------------------------
// Dual numbers
// ---------------------------------------------------------------------------

template <std::floating_point T>
struct DualNumber {
    T real{0}, dual{0};

    constexpr DualNumber() = default;
    constexpr DualNumber(T r, T d = 0) : real(r), dual(d) {}

    constexpr DualNumber operator+(const DualNumber& o) const { return {real + o.real, dual + o.dual}; }
    constexpr DualNumber operator-(const DualNumber& o) const { return {real - o.real, dual - o.dual}; }
    constexpr DualNumber operator-() const { return {-real, -dual}; }
    constexpr DualNumber operator*(T s) const { return {real * s, dual * s}; }
    // eps^2 = 0: the dual*dual term is dropped.
    constexpr DualNumber operator*(const DualNumber& o) const {
        return {real * o.real, real * o.dual + dual * o.real};
    }
    constexpr DualNumber operator/(const DualNumber& o) const {
        return {real / o.real, (dual * o.real - real * o.dual) / (o.real * o.real)};
    }

    constexpr bool operator==(const DualNumber&) const = default;
};

/// sqrt(a + eps b) = sqrt(a) + eps b / (2 sqrt(a)); requires a > 0.
template <std::floating_point T>
DualNumber<T> sqrt(const DualNumber<T>& v) {
    const T root = std::sqrt(v.real);
    return {root, v.dual / (2 * root)};
}

template <std::floating_point T>
DualNumber<T> dual_sin(const DualNumber<T>& angle) {
    return {std::sin(angle.real), angle.dual * std::cos(angle.real)};
}

template <std::floating_point T>
DualNumber<T> dual_cos(const DualNumber<T>& angle) {
    return {std::cos(angle.real), -angle.dual * std::sin(angle.real)};
}

/// real + eps * dual with 3-vector parts; a unit screw axis has |real| = 1 and real . dual = 0.
template <std::floating_point T>
struct DualVector {
    Vec3<T> real{}, dual{};

    constexpr DualVector operator*(const DualNumber<T>& s) const {
        return {real * s.real, real * s.dual + dual * s.real};
    }
    constexpr bool operator==(const DualVector&) const = default;
};

// ---------------------------------------------------------------------------
// Dual quaternions
// ---------------------------------------------------------------------------

/// The three conjugates in common use.
enum class ConjugateVariant {
    QuatQuat,  ///< real* + eps dual*   (norms and inverses)
    DualFlip,  ///< real  - eps dual
    Combined,  ///< real* - eps dual*   (point transforms)
};

template <std::floating_point T>
struct DualQuaternion {
    Quaternion<T> real{}, dual{};

    constexpr DualQuaternion() = default;
    constexpr DualQuaternion(const Quaternion<T>& r, const Quaternion<T>& d) : real(r), dual(d) {}

    static constexpr DualQuaternion identity() { return {Quaternion<T>::identity(), {}}; }
    static constexpr DualQuaternion zero() { return {}; }

    /// Dual quaternion with dual scalar part s and dual vector part v.
    static constexpr DualQuaternion from_scalar_vector(const DualNumber<T>& s, const DualVector<T>& v) {
        return {{s.real, v.real}, {s.dual, v.dual}};
    }

    constexpr DualQuaternion operator+(const DualQuaternion& o) const { return {real + o.real, dual + o.dual}; }
    constexpr DualQuaternion operator-(const DualQuaternion& o) const { return {real - o.real, dual - o.dual}; }
    constexpr DualQuaternion operator-() const { return {-real, -dual}; }
    constexpr DualQuaternion operator*(T s) const { return {real * s, dual * s}; }
    friend constexpr DualQuaternion operator*(T s, const DualQuaternion& q) { return q * s; }

    constexpr DualQuaternion operator*(const DualQuaternion& o) const {
        return {real * o.real, real * o.dual + dual * o.real};
    }

    /// Multiplication by the dual scalar s: (real + eps dual)(s.real + eps s.dual).
    constexpr DualQuaternion operator*(const DualNumber<T>& s) const {
        return {real * s.real, real * s.dual + dual * s.real};
    }

    constexpr bool operator==(const DualQuaternion&) const = default;
};

template <std::floating_point T>
constexpr DualQuaternion<T> conjugate(const DualQuaternion<T>& q,
                                      ConjugateVariant variant = ConjugateVariant::QuatQuat) {
    switch (variant) {
        case ConjugateVariant::DualFlip: return {q.real, -q.dual};
        case ConjugateVariant::Combined: return {conjugate(q.real), -conjugate(q.dual)};
        case ConjugateVariant::QuatQuat: break;
    }
    return {conjugate(q.real), conjugate(q.dual)};
}

/// Largest violation of the two unit conditions |real| = 1 and real . dual = 0.
template <std::floating_point T>
T unit_violation(const DualQuaternion<T>& q) {
    return std::max(std::abs(norm(q.real) - T(1)), std::abs(dot(q.real, q.dual)));
}

template <std::floating_point T>
bool is_unit(const DualQuaternion<T>& q, T tolerance = T(tol::kUnit)) {
    return unit_violation(q) <= tolerance;
}

template <std::floating_point T>
void require_unit(const DualQuaternion<T>& q, const char* what) {
    const T violation = unit_violation(q);
    if (!(violation <= T(tol::kUnitCheck))) {
        throw Error(ErrorKind::NotUnit,
                    std::string(what) + " is not a unit dual quaternion (violation " +
                        std::to_string(violation) + ")");
    }
}

/// Dual-valued magnitude: the dual square root of q q* (QuatQuat conjugate),
/// equal to (|real|, real . dual / |real|).
template <std::floating_point T>
DualNumber<T> dual_norm(const DualQuaternion<T>& q) {
    const T real_norm = norm(q.real);
    if (!(real_norm > T(tol::kZeroRealPart))) {
        throw Error(ErrorKind::ZeroRealPart, "dual norm undefined for a vanishing real part");
    }
    return {real_norm, dot(q.real, q.dual) / real_norm};
}

/// Divides by the dual norm so that both unit conditions hold on the result.
template <std::floating_point T>
DualQuaternion<T> normalized(const DualQuaternion<T>& q) {
    const DualNumber<T> n = dual_norm(q);
    const DualNumber<T> inv = DualNumber<T>(1) / n;
    return q * inv;
}

template <std::floating_point T>
DualQuaternion<T> inverse(const DualQuaternion<T>& q) {
    require_unit(q, "inverse operand");
    return conjugate(q, ConjugateVariant::QuatQuat);
}

/// Applies the rigid transform q to point p via q (1 + eps p) conj_combined(q).
template <std::floating_point T>
Vec3<T> transform_point(const DualQuaternion<T>& q, const Vec3<T>& p) {
    require_unit(q, "transform");
    const DualQuaternion<T> point{Quaternion<T>::identity(), Quaternion<T>::pure(p)};
    return (q * point * conjugate(q, ConjugateVariant::Combined)).dual.vec();
}

/// Representative of the double cover with real.w >= 0 (ties: first nonzero of real.x/y/z >= 0).
template <std::floating_point T>
constexpr DualQuaternion<T> canonicalized(const DualQuaternion<T>& q) {
    return needs_sign_flip(q.real) ? -q : q;
}

using Vec3d = Vec3<double>;
using Quaterniond = Quaternion<double>;
using DualNumberd = DualNumber<double>;
using DualVectord = DualVector<double>;
using DualQuaterniond = DualQuaternion<double>;

}  // namespace dqinterp
