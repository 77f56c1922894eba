#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace olab {

using cplx = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
/// x⊥ = (−x₂, x₁): counterclockwise rotation by a right angle.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline cplx to_cplx(Vec2 a) { return {a.x, a.y}; }
inline Vec2 to_vec(cplx z) { return {z.real(), z.imag()}; }

/// Row-major 2×2 matrix.
struct Mat2 {
    double a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
    constexpr Mat2 transposed() const { return {a11, a21, a12, a22}; }
    constexpr double det() const { return a11 * a22 - a12 * a21; }
    constexpr Vec2 operator*(Vec2 v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
    constexpr Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    constexpr Mat2 operator-(Mat2 o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }
    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)), std::max(std::abs(a21), std::abs(a22)));
    }
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class ShapeKind { UnitDisk, Ellipse };

/// Obstacle Ω at unit scale. Only the disk and axis-aligned ellipses are
/// admitted, which keeps every shape smooth, bounded and simply connected.
class ObstacleShape {
public:
    static ObstacleShape unit_disk();
    /// Semi-axes a ≥ b > 0 along x and y. bounding_radius defaults to a.
    static ObstacleShape ellipse(double a, double b, double bounding_radius = 0.0);

    ShapeKind kind() const { return kind_; }
    double semi_major() const { return a_; }
    double semi_minor() const { return b_; }
    /// R with Ω ⊂ B_R.
    double bounding_radius() const { return R_; }

    /// Level function: < 1 strictly inside, = 1 on ∂Ω, > 1 outside.
    double level(Vec2 x) const { return (x.x * x.x) / (a_ * a_) + (x.y * x.y) / (b_ * b_); }
    bool contains(Vec2 x) const { return level(x) < 1.0; }
    /// Boundary point with parameter t ∈ [0, 2π).
    Vec2 boundary_point(double t) const { return {a_ * std::cos(t), b_ * std::sin(t)}; }

    std::string describe() const;

private:
    ObstacleShape(ShapeKind k, double a, double b, double R) : kind_(k), a_(a), b_(b), R_(R) {}
    ShapeKind kind_;
    double a_, b_, R_;
};

/// Conformal map T from the exterior of Ω onto the exterior of the unit disk,
/// fixing infinity with T(z) = βz + h(z), β > 0. For the ellipse this is the
/// inverse Joukowski map; for the disk it is the identity.
class ConformalMap {
public:
    explicit ConformalMap(ObstacleShape shape);

    const ObstacleShape& shape() const { return shape_; }
    double beta() const { return beta_; }

    /// T(x). Throws DomainError for points strictly inside Ω; boundary points
    /// are accepted and land on the unit circle.
    Vec2 map_point(Vec2 x) const;
    /// DT(x) as the real 2×2 Jacobian of the holomorphic map.
    Mat2 map_jacobian(Vec2 x) const;
    /// Complex T(x) and T'(x) together (no domain check).
    std::pair<cplx, cplx> eval(cplx z) const;
    /// h(x) = T(x) − βx.
    Vec2 h(Vec2 x) const;
    /// T⁻¹(ζ) for |ζ| ≥ 1 and its complex derivative.
    std::pair<cplx, cplx> inverse(cplx zeta) const;

    /// β recovered from far-field samples T(r,0)/r, r ∈ {10², 10³, 10⁴};
    /// returns the three successive estimates.
    std::array<double, 3> beta_far_field_estimates() const;

private:
    ObstacleShape shape_;
    double beta_;
    double focal2_;  // c² = a² − b²
};

/// Real Jacobian of a holomorphic map with complex derivative d.
inline Mat2 holomorphic_jacobian(cplx d) { return {d.real(), -d.imag(), d.imag(), d.real()}; }

}  // namespace olab
