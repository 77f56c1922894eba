#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "olab/geometry.hpp"

namespace olab {

/// Periodic box [−L, L)² with n nodes per axis; node i sits at −L + i·h.
struct CartesianGrid {
    double half_width = 1.0;
    int n = 64;

    CartesianGrid() = default;
    CartesianGrid(double L, int n_points);

    double spacing() const { return 2.0 * half_width / n; }
    double coord(int i) const { return -half_width + i * spacing(); }
    Vec2 point(int i, int j) const { return {coord(i), coord(j)}; }
    std::size_t size() const { return static_cast<std::size_t>(n) * n; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * n + i; }
    /// Index of the node at the origin.
    int origin_index() const { return n / 2; }
};

/// Log-polar grid of the exterior domain Π_ε in conformal coordinates:
/// ζ = e^{s+iθ}, x = ε T⁻¹(ζ), s ∈ [0, log ρ_out] (n_r intervals), θ periodic.
/// For the disk the radii are r = ε e^s.
class PolarGrid {
public:
    PolarGrid(ConformalMap map, double eps, double rho_out, int n_r, int n_theta);

    const ConformalMap& map() const { return map_; }
    double eps() const { return eps_; }
    double rho_out() const { return rho_out_; }
    int n_r() const { return n_r_; }
    int n_theta() const { return n_theta_; }
    double ds() const { return ds_; }
    double dtheta() const { return dtheta_; }
    /// Physical outer radius for a circle in the mapped plane (far-field estimate ε ρ_out / β).
    double outer_radius() const { return eps_ * rho_out_ / map_.beta(); }

    std::size_t size() const { return static_cast<std::size_t>(n_r_ + 1) * n_theta_; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_theta_ + j; }
    double s(int i) const { return i * ds_; }
    double theta(int j) const { return j * dtheta_; }

    Vec2 point(int i, int j) const { return points_[index(i, j)]; }
    /// Metric scale factor |dx/ds| = ε |(T⁻¹)'(ζ)| ρ.
    double scale(int i, int j) const { return scale_[index(i, j)]; }
    /// Unit vector of increasing s (physical), e_θ = perp(e_s).
    Vec2 e_s(int i, int j) const { return es_[index(i, j)]; }
    /// Area quadrature weight: trapezoid in s, periodic in θ.
    double weight(int i, int j) const;

    /// Mapped coordinates (s, θ) of a physical exterior point.
    std::pair<double, double> mapped_coords(Vec2 x) const;

private:
    ConformalMap map_;
    double eps_, rho_out_;
    int n_r_, n_theta_;
    double ds_, dtheta_;
    std::vector<Vec2> points_;
    std::vector<double> scale_;
    std::vector<Vec2> es_;
};

/// Scaled obstacle εΩ.
struct ScaledObstacle {
    ObstacleShape shape;
    double eps;
    bool contains(Vec2 x) const { return shape.contains(x / eps); }
};

namespace region {
struct All {};
struct Exterior { ScaledObstacle obstacle; };
struct Obstacle { ScaledObstacle obstacle; };
struct Annulus { double inner, outer; };
}  // namespace region
using Region = std::variant<region::All, region::Exterior, region::Obstacle, region::Annulus>;

bool region_contains(const Region& r, Vec2 x);

/// Sampled scalar (1 component) or vector (2 components) field on a grid.
/// Values are point-major: values[p * components + c].
struct Field {
    std::variant<CartesianGrid, PolarGrid> grid;
    int components = 1;
    std::vector<double> values;
    /// Nonzero where the node lies inside the obstacle (zero-extended cells).
    std::vector<unsigned char> inside;

    static Field zeros(std::variant<CartesianGrid, PolarGrid> g, int components);
    static Field sample_scalar(std::variant<CartesianGrid, PolarGrid> g, const std::function<double(Vec2)>& f);
    static Field sample_vector(std::variant<CartesianGrid, PolarGrid> g, const std::function<Vec2(Vec2)>& f);

    std::size_t points() const { return values.size() / components; }
    Vec2 point(std::size_t p) const;
    double weight(std::size_t p) const;
    double scalar(std::size_t p) const { return values[p * components]; }
    Vec2 vec(std::size_t p) const { return {values[p * 2], values[p * 2 + 1]}; }
    void set(std::size_t p, Vec2 v) { values[p * 2] = v.x; values[p * 2 + 1] = v.y; }
    bool is_cartesian() const { return std::holds_alternative<CartesianGrid>(grid); }
};

struct NormResult {
    double value = 0.0;
    bool empty_region = false;
    operator double() const { return value; }
};

/// L² norm over a region: trapezoid on the Cartesian box, area weights on the polar grid.
NormResult l2_norm(const Field& f, const Region& r = region::All{});
/// Max |f| over grid nodes in the region.
NormResult sup_norm(const Field& f, const Region& r = region::All{});

enum class Interp { Linear, Cubic };

/// Interpolated value at x (component c). Cartesian: bilinear or Catmull-Rom
/// bicubic; polar: bilinear in (s, θ). Throws DomainError outside the grid.
double interpolate(const Field& f, Vec2 x, int c = 0, Interp kind = Interp::Linear);
Vec2 interpolate_vec(const Field& f, Vec2 x, Interp kind = Interp::Linear);

/// A field on Π_ε viewed as a field on ℝ²: exactly zero inside εΩ̄, the
/// interpolated values outside.
class ZeroExtension {
public:
    explicit ZeroExtension(Field f);
    const Field& field() const { return f_; }
    Vec2 probe(Vec2 x) const;
    double probe_scalar(Vec2 x) const;
    /// Sample onto a Cartesian grid; nodes inside the obstacle are marked and zero.
    Field sample(const CartesianGrid& g) const;

private:
    Field f_;
    ScaledObstacle obstacle_;
};

ZeroExtension extend_by_zero(const Field& f_on_exterior);

/// ∮ u·ds over the circle |x| = r by the trapezoid rule with n samples.
double circulation(const std::function<Vec2(Vec2)>& u, double r, int n = 1024);
/// Same for a sampled field; throws DomainError if the circle touches the obstacle
/// (polar fields) or leaves the grid.
double circulation(const Field& u, double r, int n = 1024);

/// Centered-difference divergence (periodic on the box; mapped differences on the polar grid).
Field divergence(const Field& u);
/// Centered-difference scalar curl ∂₁u₂ − ∂₂u₁ on the Cartesian box.
Field curl(const Field& u);

/// Stream function ψ with u = ∇⊥ψ and ψ(0) = 0 for a divergence-free field on the
/// Cartesian box, via free-space inversion of curl u. Throws if max|div u| exceeds
/// div_tol · max|∇u|.
Field stream_function(const Field& u, double div_tol = 1e-2);

}  // namespace olab
