#pragma once

#include <optional>
#include <vector>

#include "olab/fields.hpp"
#include "olab/fit.hpp"
#include "olab/kernels.hpp"

namespace olab {

/// Smooth compactly supported bump A·(1 − |x−c|²/ρ²)⁶, mass Aπρ²/7.
struct Bump {
    Vec2 center;
    double amplitude = 1.0;
    double radius = 0.5;
};

/// Initial vorticity ω₀. Either a radial annulus ω̄ on r₁ ≤ |x| ≤ r₂ (with
/// quintic edges of width 0.1(r₂ − r₁) unless sharp) or a sum of bumps.
class VorticityProfile {
public:
    static VorticityProfile radial_annulus(double amplitude, double r1, double r2, bool sharp = false);
    static VorticityProfile bumps(std::vector<Bump> list);
    static VorticityProfile zero();

    bool is_radial() const { return kind_ == Kind::Annulus; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    double value(Vec2 x) const;
    /// m = ∫ω₀ in closed form.
    double mass() const;
    /// Smallest and largest |x| on the support.
    double inner_support_radius() const;
    double outer_support_radius() const;
    /// ∫_{|y|<r} ω₀ for radial profiles (exact for sharp edges, Gauss–Legendre otherwise).
    double enclosed_mass(double r) const;
    /// Azimuthal velocity m(r)/(2πr) of a radial profile.
    double azimuthal_velocity(double r) const { return enclosed_mass(r) / (2.0 * 3.141592653589793 * r); }

    /// Midpoint quadrature on polar patches (about the origin for the annulus,
    /// about each bump center otherwise).
    kernels::VortexSet quadrature(int n_r = 48, int n_theta = 128) const;

    const std::vector<Bump>& bump_list() const { return bumps_; }
    double annulus_amplitude() const { return amp_; }
    double annulus_inner() const { return r1_; }
    double annulus_outer() const { return r2_; }
    bool sharp() const { return sharp_; }

private:
    enum class Kind { Zero, Annulus, Bumps };
    Kind kind_ = Kind::Zero;
    double amp_ = 0, r1_ = 0, r2_ = 0;
    bool sharp_ = false;
    std::vector<Bump> bumps_;
    double radial_value(double r) const;
};

/// Quintic smoothstep 6t⁵ − 15t⁴ + 10t³ clamped to [0, 1], with derivatives.
double smoothstep5(double t);
double smoothstep5_d1(double t);
double smoothstep5_d2(double t);

/// H(x) = x⊥/(2π|x|²). Throws DomainError at the origin.
Vec2 fullplane_h(Vec2 x);

/// u₀ = K[ω](x) by quadrature; throws SolverError-style std::runtime_error if
/// halving the quadrature resolution changes the value by more than tol.
Vec2 fullplane_velocity(const VorticityProfile& w, Vec2 x, double tol = 1e-4);

/// H^ε(x) = (1/2πε) DTᵗ(x/ε) T(x/ε)⊥/|T(x/ε)|², zero inside εΩ̄.
Vec2 harmonic_field(const ConformalMap& map, double eps, Vec2 x);

/// Exterior Biot-Savart operator K^ε for a fixed quadrature of ω, using the
/// conformal kernel with image points T(y/ε)* = T(y/ε)/|T(y/ε)|².
class ExteriorBiotSavart {
public:
    ExteriorBiotSavart(ConformalMap map, double eps, kernels::VortexSet sources);

    const ConformalMap& map() const { return map_; }
    double eps() const { return eps_; }
    const kernels::VortexSet& sources() const { return src_; }

    /// K^ε[ω](x); zero inside εΩ̄.
    Vec2 velocity(Vec2 x) const;
    /// Batch evaluation (OpenMP) and its serial reference.
    void velocity(std::span<const Vec2> xs, std::span<Vec2> out) const;
    void velocity_serial(std::span<const Vec2> xs, std::span<Vec2> out) const;

private:
    ConformalMap map_;
    double eps_;
    kernels::VortexSet src_;
    std::vector<cplx> eta_, eta_image_;
};

/// Throws std::invalid_argument unless ε(R+2) < inner support radius of ω.
void check_support_clearance(const ConformalMap& map, double eps, const VorticityProfile& w);

/// ϑ^ε = K^ε[ω₀] + (m + extra_circulation)·H^ε and u₀ = K[ω₀] evaluated from one
/// shared quadrature (m is the discrete total of that quadrature).
class InitialData {
public:
    InitialData(const ConformalMap& map, double eps, const VorticityProfile& w, double extra_circulation = 0.0,
                int quad_r = 48, int quad_theta = 128);

    double eps() const { return exterior_.eps(); }
    double mass() const { return mass_; }
    Vec2 theta_eps(Vec2 x) const;
    Vec2 u0(Vec2 x) const;
    void theta_eps(std::span<const Vec2> xs, std::span<Vec2> out) const;
    void u0(std::span<const Vec2> xs, std::span<Vec2> out) const;
    const ExteriorBiotSavart& exterior() const { return exterior_; }

private:
    ExteriorBiotSavart exterior_;
    double mass_;
    double extra_;
};

/// ϑ^ε sampled on an exterior polar grid (zero-extension is implied by the grid).
Field initial_data(const ConformalMap& map, double eps, const VorticityProfile& w, const PolarGrid& grid,
                   double extra_circulation = 0.0);

struct InitialErrorOptions {
    /// Physical far radius of the exterior probe grid.
    double far_radius = 60.0;
    int n_r = 240;
    int n_theta = 256;
    int interior_n_r = 24;
    int interior_n_theta = 64;
    double extra_circulation = 0.0;
};

struct InitialErrorParts {
    double exterior = 0.0;  ///< ‖ϑ^ε − u₀‖ on Π_ε (truncated at far_radius)
    double interior = 0.0;  ///< ‖u₀‖ on εΩ
    double total() const;
};

/// ‖ϑ^ε − u₀‖_{L²(ℝ²)} split into the Π_ε and εΩ parts.
InitialErrorParts initial_data_error(const ConformalMap& map, double eps, const VorticityProfile& w,
                                     const InitialErrorOptions& opt = {});

struct InitialRateRow {
    double eps;
    double error;
    double exterior;
    double interior;
};

struct InitialRateStudy {
    std::vector<InitialRateRow> rows;
    std::optional<RateFit> fit;
    /// True when every error sits below the quadrature floor (cancellation oracle).
    bool exact = false;
};

InitialRateStudy initial_data_rate_study(const ConformalMap& map, const VorticityProfile& w,
                                         const std::vector<double>& eps_list, const InitialErrorOptions& opt = {},
                                         double floor = 1e-8);

}  // namespace olab
