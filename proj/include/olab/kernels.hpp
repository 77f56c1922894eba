#pragma once

// Hot loops shared by the Biot-Savart quadrature and the full-plane solver.
// Each kernel has an OpenMP version used by the library and a serial
// reference kept for tests and the benchmark.

#include <memory>
#include <span>
#include <vector>

#include "olab/fields.hpp"

namespace olab::kernels {

/// Point vortices with strengths Γ_j (quadrature weight × vorticity).
struct VortexSet {
    std::vector<Vec2> points;
    std::vector<double> strengths;
    double total() const;
};

/// u(x) = Σ_j Γ_j (x − y_j)⊥ / (2π|x − y_j|²), skipping coincident pairs.
void direct_velocity(const VortexSet& src, std::span<const Vec2> targets, std::span<Vec2> out);
void direct_velocity_serial(const VortexSet& src, std::span<const Vec2> targets, std::span<Vec2> out);

/// ψ(x) = Σ_j Γ_j log|x − y_j| / (2π), skipping coincident pairs.
void direct_stream(const VortexSet& src, std::span<const Vec2> targets, std::span<double> out);
void direct_stream_serial(const VortexSet& src, std::span<const Vec2> targets, std::span<double> out);

/// Mean of log|x| over the cell [−h/2, h/2]².
double log_cell_average(double h);

/// Free-space (non-periodic) convolution on a CartesianGrid by zero-padded FFT:
/// ψ = G ∗ ω with G = log|x|/(2π) (cell-averaged at the origin) and
/// u = ∇⊥G ∗ ω with the self-cell skipped.
class FreeSpaceConvolver {
public:
    explicit FreeSpaceConvolver(const CartesianGrid& g);
    ~FreeSpaceConvolver();
    FreeSpaceConvolver(const FreeSpaceConvolver&) = delete;
    FreeSpaceConvolver& operator=(const FreeSpaceConvolver&) = delete;

    const CartesianGrid& grid() const { return grid_; }
    /// source is a scalar density sampled at the nodes (index j*n + i).
    void stream(std::span<const double> source, std::span<double> psi);
    void velocity(std::span<const double> source, std::span<double> ux, std::span<double> uy);

private:
    struct Plan;
    CartesianGrid grid_;
    std::unique_ptr<Plan> plan_;
};

/// Serial O(N²) references for the FFT convolutions.
void convolve_stream_serial(const CartesianGrid& g, std::span<const double> source, std::span<double> psi);
void convolve_velocity_serial(const CartesianGrid& g, std::span<const double> source,
                              std::span<double> ux, std::span<double> uy);

}  // namespace olab::kernels
