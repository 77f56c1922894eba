#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "olab/biot_savart.hpp"
#include "olab/geometry.hpp"

namespace olab {

enum class CouplingRule {
    Paper,     ///< ε = factor · C₁ · ν with measured C₁
    Ratio,     ///< ε = c · ν, flagged as outside the theorem when c > C₁
    Explicit,  ///< one ε per ν, flagged likewise
};

struct EulerSettings {
    double half_width = 8.0;
    int n = 512;
    double dt = 0.01;
};

struct NsSettings {
    int n_theta = 256;
    double ds = 0.02;
    double r_out = 24.0;
    double dt = 2e-3;
    double output_interval = 0.05;
    int implicit_start_steps = 2;
};

struct ConstantsSettings {
    std::vector<double> eps{0.04, 0.02, 0.01, 0.005};
    int poincare_resolution = 64;
    int n_theta = 256;
};

struct InitialDataSettings {
    std::vector<double> eps{0.04, 0.02, 0.01, 0.005};
    InitialErrorOptions options;
};

struct SweepConfig {
    ObstacleShape shape = ObstacleShape::unit_disk();
    VorticityProfile vorticity = VorticityProfile::zero();
    double T = 0.5;
    std::vector<double> nu{0.04, 0.02, 0.01, 0.005};
    CouplingRule rule = CouplingRule::Paper;
    double coupling_factor = 0.99;
    double coupling_ratio = 0.0;
    std::vector<double> explicit_eps;
    EulerSettings euler;
    NsSettings ns;
    ConstantsSettings constants;
    InitialDataSettings initial_data;
    int workers = 1;
    std::filesystem::path output_dir = "olab_out";
    /// Source text, copied into each run directory.
    std::string source;
};

/// Parses a JSON config. Throws std::invalid_argument with the offending key.
SweepConfig parse_config(const std::string& json_text);
SweepConfig load_config(const std::filesystem::path& path);

/// "disk" or "ellipse:a,b" (optionally "ellipse:a,b,R").
ObstacleShape parse_shape(const std::string& text);

}  // namespace olab
