#pragma once

#include "olab/geometry.hpp"

namespace olab {

/// A full-plane Euler flow frozen at one instant, queried pointwise.
/// ψ and p are normalized so that ψ(0) = p(0) = 0.
class FlowSnapshot {
public:
    virtual ~FlowSnapshot() = default;

    virtual Vec2 velocity(Vec2 x) const = 0;
    /// Entries (∂_j u_i): a11 = ∂₁u₁, a12 = ∂₂u₁, a21 = ∂₁u₂, a22 = ∂₂u₂.
    virtual Mat2 velocity_gradient(Vec2 x) const = 0;
    virtual double stream(Vec2 x) const = 0;
    virtual double pressure(Vec2 x) const = 0;
    virtual double stream_dt(Vec2 x) const = 0;

    /// ∫|∇u|² over the plane (equal to ∫ω² for decaying fields).
    virtual double gradient_energy() const = 0;
    /// sup |u| and sup |∇u| over the plane.
    virtual double sup_speed() const = 0;
    virtual double sup_gradient() const = 0;

    /// ∇ψ = −u⊥.
    Vec2 stream_gradient(Vec2 x) const { return -perp(velocity(x)); }
};

}  // namespace olab
