#pragma once

#include <array>
#include <optional>
#include <vector>

#include "olab/fields.hpp"
#include "olab/fit.hpp"
#include "olab/flow.hpp"

namespace olab {

/// φ(r) = S(r − (R+1)) with S the quintic smoothstep, so φ = 0 on [0, R+1]
/// and φ = 1 on [R+2, ∞). φ^ε(x) = φ(|x|/ε).
class Cutoff {
public:
    explicit Cutoff(double bounding_radius);

    struct Value {
        double phi = 0.0;
        Vec2 grad;
        Mat2 hess;
    };

    double R() const { return R_; }
    double inner(double eps) const { return (R_ + 1.0) * eps; }
    double outer(double eps) const { return (R_ + 2.0) * eps; }
    Value at(double eps, Vec2 x) const;

    static constexpr double sup_d1 = 1.875;
    static constexpr double sup_d2 = 5.773502691896258;  // 10/√3

private:
    double R_;
};

/// u^ε(x) = φ^ε u + ψ ∇⊥φ^ε.
Vec2 corrector_velocity(const Cutoff& c, double eps, const FlowSnapshot& flow, Vec2 x);
/// ∇u^ε(x) with the same entry layout as FlowSnapshot::velocity_gradient.
Mat2 corrector_gradient(const Cutoff& c, double eps, const FlowSnapshot& flow, Vec2 x);

/// u^ε = ∇⊥(φ^ε ψ) from a sampled stream function on a Cartesian grid, evaluated
/// at the nodes of `target`. Nodes inside εΩ are zero. Throws std::invalid_argument
/// if |ψ(0)| exceeds psi0_tol · max|ψ|.
Field corrector_velocity(const Cutoff& c, const Field& psi, double eps,
                         const std::variant<CartesianGrid, PolarGrid>& target, double psi0_tol = 1e-8);

struct LemmaRow {
    double eps = 0.0;
    double item1 = 0.0;  ///< ‖∇u^ε‖²
    double item2 = 0.0;  ///< ‖u^ε‖∞
    double item3 = 0.0;  ///< ‖u^ε − u‖ + ‖u^ε − φ^ε u‖
    double item4 = 0.0;  ///< Σ_ij ‖∂_iψ ∂_jφ^ε‖∞ + Σ_ij ‖ψ ∂_ij φ^ε‖∞
    double item5 = 0.0;  ///< ‖p∇φ^ε‖ + ‖∂_tψ ∇φ^ε‖
    double k4_pointwise = 0.0;  ///< sup_x ε(|∇ψ∇φ^ε| + |ψ∇²φ^ε|)
};

struct LemmaOptions {
    int n_radial = 12;   ///< Gauss–Legendre nodes across each radial band
    int n_theta = 256;
    int n_sup_radial = 48;
};

/// Quantities of the corrector Lemma at one ε, maximized over the snapshots.
LemmaRow measure_lemma_row(const ObstacleShape& shape, double eps, const std::vector<const FlowSnapshot*>& flows,
                           const LemmaOptions& opt = {});

struct CorrectorConstants {
    std::vector<LemmaRow> rows;
    std::array<std::optional<RateFit>, 5> slopes;
    double K1 = 0, K2 = 0, K3 = 0, K4 = 0, K5 = 0;
    double K0 = 0, K5_tilde = 0;
    /// Operational K₄ = sup ε(|∇ψ∇φ^ε| + |ψ∇²φ^ε|) over the ε list and snapshots.
    double K4_operational = 0;
    double sup_u_origin = 0;
    /// K₄ / sup_t |u(0,t)|; absent when the flow is at rest at the origin.
    std::optional<double> K4_tilde;
};

/// ε₀ = r₁ / (2(R+2)) for inner support radius r₁.
double epsilon_zero(const ObstacleShape& shape, double inner_support_radius);

/// Requires at least three ε values in (0, ε₀).
CorrectorConstants measure_lemma_constants(const ObstacleShape& shape, const std::vector<double>& eps_list,
                                           const std::vector<const FlowSnapshot*>& flows, double eps0,
                                           const LemmaOptions& opt = {});

/// K̃₄ = K₄ / sup_t |u(0,t)|; std::nullopt when that supremum is below tol.
std::optional<double> k4_tilde(double K4, const std::vector<const FlowSnapshot*>& flows, double tol = 1e-12);

}  // namespace olab
