#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "olab/biot_savart.hpp"
#include "olab/fields.hpp"
#include "olab/flow.hpp"

namespace olab {

struct EulerOptions {
    /// Times at which full frames are stored; T is always included.
    std::vector<double> output_times;
    /// Frames at these times also carry p, ∂_tψ and ∇u (the times are added to the outputs).
    std::vector<double> diagnostic_times;
    double max_cfl = 0.5;
    /// Relative growth of max|ω| that aborts the run.
    double blowup_growth = 0.1;
};

/// Fields of the full-plane flow at one output time. ψ and p are pinned to
/// zero at the origin node.
struct EulerFrame {
    double t = 0.0;
    Field omega;
    Field u;
    Field psi;
    std::optional<Field> pressure;
    std::optional<Field> psi_t;
    /// ∇u with components (∂₁u₁, ∂₂u₁, ∂₁u₂, ∂₂u₂).
    std::optional<Field> grad_u;
};

struct EulerRun {
    CartesianGrid grid;
    double dt = 0.0;
    double T = 0.0;
    std::vector<EulerFrame> frames;
    /// Per-step monitors, index 0 is t = 0.
    std::vector<double> times;
    std::vector<double> mass;
    std::vector<double> max_vorticity;
    std::vector<double> energy;
    std::vector<Vec2> origin_velocity;

    const EulerFrame& frame_at(double t, double tol = 1e-9) const;
};

/// Vorticity transport ∂_tω + u·∇ω = 0 on the box, u = K[ω] by free-space FFT
/// convolution, spectral ∇ω, SSP-RK3 in time. Throws std::invalid_argument if the
/// support of ω₀ is not well inside the box, std::runtime_error on a CFL violation
/// or vorticity blow-up.
EulerRun solve_euler(const VorticityProfile& w0, const CartesianGrid& grid, double dt, double T,
                     const EulerOptions& opt = {});

/// u(0, t), linear in time between recorded steps.
Vec2 velocity_at_origin(const EulerRun& run, double t);
/// sup over recorded steps of |u(0, t)|.
double sup_velocity_at_origin(const EulerRun& run);

/// p with −Δp = ∂_iu_j ∂_ju_i, and ∇u, from a velocity field on the box.
Field velocity_gradient(const Field& u);
Field pressure_from_velocity(const Field& u, const Field& grad_u);

/// FlowSnapshot backed by an Euler frame with cubic interpolation.
/// The frame must carry diagnostics.
class EulerSnapshot : public FlowSnapshot {
public:
    explicit EulerSnapshot(const EulerFrame& frame);

    Vec2 velocity(Vec2 x) const override;
    Mat2 velocity_gradient(Vec2 x) const override;
    double stream(Vec2 x) const override;
    double pressure(Vec2 x) const override;
    double stream_dt(Vec2 x) const override;
    double gradient_energy() const override { return grad_energy_; }
    double sup_speed() const override { return sup_u_; }
    double sup_gradient() const override { return sup_grad_; }

private:
    const EulerFrame* f_;
    double grad_energy_ = 0, sup_u_ = 0, sup_grad_ = 0;
};

/// A single bump A(1 − |x−c|²/ρ²)⁶ is a steady Euler flow: azimuthal about c with
/// u_θ = m(s)/(2πs), ψ' = u_θ and p' = u_θ²/s in s = |x − c|, pinned at the origin.
class SteadyBumpFlow : public FlowSnapshot {
public:
    explicit SteadyBumpFlow(Bump b);

    Vec2 velocity(Vec2 x) const override;
    Mat2 velocity_gradient(Vec2 x) const override;
    double stream(Vec2 x) const override;
    double pressure(Vec2 x) const override;
    double stream_dt(Vec2) const override { return 0.0; }
    double gradient_energy() const override;
    double sup_speed() const override { return sup_u_; }
    double sup_gradient() const override { return sup_grad_; }

    double azimuthal(double s) const;
    double radial_stream(double s) const;
    double radial_pressure(double s) const;

private:
    Bump b_;
    double psi_c_ = 0, p_c_ = 0, sup_u_ = 0, sup_grad_ = 0;
};

}  // namespace olab
