#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "olab/biot_savart.hpp"
#include "olab/fields.hpp"

namespace olab {

struct NsOptions {
    /// Outer radius of the mapped grid in the ζ-plane (physical r_out ≈ ε ρ_out / β).
    double rho_out = 400.0;
    int n_r = 300;
    int n_theta = 256;
    double dt = 2e-3;
    double T = 0.5;
    /// Times at which frames are stored; T is always included.
    std::vector<double> output_times;
    /// Backward-Euler steps before switching to Crank–Nicolson.
    int implicit_start_steps = 2;
    int multipole_order = 8;
    /// Advective Courant limit; a step sub-cycles its advection stage to stay below it.
    double max_cfl = 0.8;
    int max_substeps = 64;
};

/// State on the mapped polar grid at one output time, indexed by PolarGrid::index.
struct NsFrame {
    double t = 0.0;
    std::vector<double> omega;  ///< includes the wall row
    std::vector<double> psi;
    std::vector<Vec2> u;        ///< Cartesian components
};

struct NsRun {
    double eps = 0.0;
    double nu = 0.0;
    double dt = 0.0;
    double T = 0.0;
    std::shared_ptr<const PolarGrid> grid;
    std::vector<NsFrame> frames;
    /// Per-step series, index 0 is t = 0.
    std::vector<double> times;
    std::vector<double> enstrophy;  ///< ½∫ω²
    std::vector<double> energy;     ///< ‖u‖², squared L² norm
    std::vector<double> dissipated; ///< 2ν∫₀ᵗ‖ω‖²
    std::vector<double> wall_slip;  ///< max tangential wall velocity
    double circulation = 0.0;       ///< conserved total circulation
    int max_substeps_used = 1;

    const NsFrame& frame_at(double t, double tol = 1e-9) const;
    /// Frame velocity as a Field on the run's grid.
    Field velocity_field(const NsFrame& f) const;
    /// max_t (E(t) + 2ν∫‖ω‖² − E(0)) / E(0); zero for a flow at rest.
    double energy_residual() const;
};

/// Vorticity–stream-function Navier–Stokes in the exterior of εΩ on the
/// conformal log-polar grid ζ = e^{s+iθ}, x = ε T⁻¹(ζ). Advection is explicit
/// (Arakawa Jacobian, SSP-RK3), diffusion implicit (backward Euler start, then
/// Crank–Nicolson) with Thom wall vorticity enforced through an influence matrix
/// and conserved circulation. The initial stream function solves the Poisson
/// problem with zero body circulation, which is the discrete ϑ^ε.
/// Throws std::invalid_argument for bad parameters, std::runtime_error on a
/// stability violation.
NsRun solve_ns(const ConformalMap& map, double eps, double nu, const VorticityProfile& w0, const NsOptions& opt);
/// Same with initial vorticity sampled on the grid (wall row included).
NsRun solve_ns(std::shared_ptr<const PolarGrid> grid, double nu, const Field& omega0, const NsOptions& opt);

/// Stream function with zero body circulation for vorticity on the polar grid,
/// and its velocity. Used for the initial data and by tests.
Field exterior_stream(const PolarGrid& grid, const Field& omega, int multipole_order = 8);
/// Velocity from ψ; on the wall the normal derivative uses the Taylor
/// expansion with the wall vorticity, which vanishes under the Thom closure.
Field exterior_velocity_from_stream(const PolarGrid& grid, const Field& psi, const Field& omega);

std::vector<double> enstrophy_series(const NsRun& run);
/// ∫₀ᵀ Ω(t) dt by the trapezoid rule on the step series.
double enstrophy_budget(const NsRun& run);

/// 1D oracle for circular symmetry: ∂_t v = ν(v_rr + v_r/r − v/r²) on
/// ε ≤ r ≤ r_out with v(ε) = 0 and v(r_out) = Γ/(2π r_out), second-order
/// differences on a uniform grid, Crank–Nicolson after a backward-Euler start.
struct RadialReference {
    double eps = 0.0, nu = 0.0, r_out = 0.0, gamma = 0.0;
    std::vector<double> r;
    std::vector<double> times;
    std::vector<std::vector<double>> v;  ///< v[k][i] at times[k]

    /// Linear interpolation in r at the stored time index k.
    double at(std::size_t k, double radius) const;
    /// Circulation 2π r v at grid index i.
    double circulation(std::size_t k, std::size_t i) const { return 2.0 * 3.141592653589793 * r[i] * v[k][i]; }
    /// 2πν r ∂_rω at grid index i with ω = v_r + v/r by centered differences.
    double circulation_flux(std::size_t k, std::size_t i) const;
};

RadialReference radial_reference(double eps, double nu, const std::function<double(double)>& v0, double r_out,
                                 double gamma, double T, double dt, int n_r,
                                 const std::vector<double>& output_times = {});

}  // namespace olab
