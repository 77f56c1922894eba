#pragma once

#include <Eigen/Sparse>

#include "olab/geometry.hpp"

namespace olab {

/// P1 finite elements on Π_ε ∩ B_{(R+2)ε} with the structured mesh
/// x(s, t) = ε[(1 − s) b(t) + s (R+2)(cos t, sin t)], b the obstacle boundary.
/// W = 0 on the obstacle, natural condition on the outer circle.
class PoincareProblem {
public:
    PoincareProblem(const ObstacleShape& shape, double eps, int n_s, int n_t);

    int n_s() const { return n_s_; }
    int n_t() const { return n_t_; }
    Eigen::Index dofs() const { return K_.rows(); }
    const Eigen::SparseMatrix<double>& stiffness() const { return K_; }
    const Eigen::SparseMatrix<double>& mass() const { return M_; }

    /// Smallest μ with K v = μ M v by inverse iteration from a seeded start.
    /// Throws std::runtime_error if the Rayleigh quotient has not settled.
    double smallest_eigenvalue(double tol = 1e-13, int max_iter = 2000) const;
    /// ‖W‖ / ‖∇W‖ for nodal values on the free nodes.
    double rayleigh_ratio(const Eigen::VectorXd& w) const;

private:
    int n_s_, n_t_;
    Eigen::SparseMatrix<double> K_, M_;
};

struct PoincareEstimate {
    ObstacleShape shape;
    double eps = 0.0;
    double c = 0.0;    ///< 1/√μ₁, Richardson-extrapolated over resolutions n and n/2
    double K6 = 0.0;   ///< c/ε
    int resolution = 0;
    double c_fine = 0.0;    ///< unextrapolated value at resolution n
    double c_coarse = 0.0;  ///< unextrapolated value at resolution n/2
};

/// n_s = resolution radial cells and 4·resolution angular cells; resolution must be even.
PoincareEstimate poincare_constant(const ObstacleShape& shape, double eps, int resolution);
/// K₆ at ε = 1.
double k6(const ObstacleShape& shape, int resolution = 64);

}  // namespace olab
