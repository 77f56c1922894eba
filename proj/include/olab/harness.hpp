#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "olab/config.hpp"
#include "olab/corrector.hpp"
#include "olab/euler.hpp"
#include "olab/fit.hpp"
#include "olab/ns_exterior.hpp"

namespace olab {

struct DeltaE {
    double exterior = 0.0;  ///< ‖u^{ν,ε} − u‖ on the grid region of Π_ε
    double interior = 0.0;  ///< ‖u‖ on εΩ
    double total() const;
};

/// δE from a viscous frame and the Euler frame at the same time, on the polar
/// nodes of the viscous run plus a quadrature of εΩ. Throws DomainError if a
/// probe leaves the Euler box.
DeltaE delta_e(const NsRun& ns, const NsFrame& f, const EulerFrame& e);
DeltaE delta_e(const NsRun& ns, const EulerRun& euler, double t);

/// ‖u‖_{L²(εΩ)} for a Cartesian velocity field, by elliptic-polar midpoints.
double obstacle_norm(const Field& u, const ObstacleShape& shape, double eps, int n_r = 24, int n_theta = 64);

/// C₁ = 1/(8 K₄ K₆²).
double compute_c1(double K4, double K6);
/// sup_t |u(0,t)| ε/ν.
double local_reynolds(const EulerRun& euler, double eps, double nu);

struct RunRecord {
    double nu = 0.0;
    double eps = 0.0;
    std::vector<double> times;
    std::vector<double> delta_e;
    double sup_delta_e = 0.0;
    double delta_e0 = 0.0;
    double initial_error = 0.0;     ///< ‖ϑ^ε − u₀‖ measured on the grid
    double enstrophy_budget = 0.0;
    double energy_residual = 0.0;
    double max_wall_slip = 0.0;
    double re_loc = 0.0;
    double triangle_gap = 0.0;      ///< max_t of | ‖u^{ν,ε}−u‖ − ‖u^{ν,ε}−u^ε‖ | − ‖u^ε−u‖ (≤ 0 expected)
    double corrector_ratio = 0.0;   ///< max_t ‖u^ε−u‖/ε
    double seconds = 0.0;
    bool outside_theorem = false;
    std::string error;              ///< nonempty when the run failed
};

struct SweepConstants {
    double K3 = 0.0, K4 = 0.0, K4_tilde = 0.0, K6 = 0.0, C1 = 0.0;
    double re_loc_bound = 0.0;  ///< 1/(8 K̃₄ K₆²)
    double sup_u_origin = 0.0;
};

struct SweepCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SweepResult {
    SweepConstants constants;
    std::vector<RunRecord> runs;
    std::optional<RateFit> fit;
    std::string fit_note;
    std::vector<SweepCheck> checks;
    bool ok() const;
};

/// Orchestrates Euler reference, constants, per-ν viscous runs and the
/// summary. Writes config.json, constants.csv, summary.csv and one run
/// directory per ν under cfg.output_dir when write_files is set.
/// Throws std::invalid_argument("empty sweep") for an empty ν list.
SweepResult run_sweep(const SweepConfig& cfg, bool write_files = true);

/// Constants shared by the sweep and the lemma-constants command.
struct LemmaStudy {
    CorrectorConstants constants;
    double eps0 = 0.0;
};
LemmaStudy lemma_study(const SweepConfig& cfg, const EulerRun& euler);
EulerRun reference_euler(const SweepConfig& cfg, const std::vector<double>& output_times);

/// Invariant checks for a lemma study (slopes within ±0.2 of 0, 0, 1, −1, 1).
std::vector<SweepCheck> lemma_checks(const CorrectorConstants& c, double tol = 0.2);

// CSV writers.
void write_field_csv(const std::filesystem::path& path, const Field& f);
void write_summary_csv(const std::filesystem::path& path, const SweepResult& r);
void write_constants_csv(const std::filesystem::path& path, const CorrectorConstants& c, const SweepConstants* sc);
void write_series_csv(const std::filesystem::path& path, const NsRun& ns, const RunRecord& rec);

/// Reads a sweep output directory and writes plot-ready CSVs into it.
/// Returns the list of files written.
std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& run_dir);

}  // namespace olab
