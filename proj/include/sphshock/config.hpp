#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sphshock/ahead.hpp"
#include "sphshock/scheme.hpp"

namespace sphshock {

struct AheadSpec {
    std::string kind = "constant";  // constant | taylor
    double rho = 1.0;
    double w = 0.0;
    TaylorField::Coeffs rho_c{}, w_c{};
    bool has_box = false;
    ValidityBox box{};
};

struct ProbeSpec {
    double perturbation_amplitude = 1e-3;
    std::vector<int> resolutions = {32, 64, 128};
};

struct PhiSpec {
    double a = 0.5;
    double c2 = 1.0;  // f(x) = a x + c2 x^2 + c3 x^3
    double c3 = 0.0;
    double x_max = 0.1;
    double tol = 1e-12;
    int n_max = 200;
};

struct RunConfig {
    Eos eos{};
    double r0 = 1.0;
    AheadSpec ahead1, ahead2;
    double epsilon = 5e-3;
    int grid_n = 64;
    double tol_fix = 1e-10;
    int max_iters = 50;
    double newton_tol = 1e-13;
    int newton_max_iters = 60;
    std::string output_dir = "out";
    ProbeSpec probes{};
    PhiSpec phi{};
    bool parallel = true;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

/// Canonical re-emission of the effective configuration (defaults filled).
std::string effective_config_json(const RunConfig& cfg);

/// FNV-1a hash of the canonical effective configuration.
std::string config_hash(const RunConfig& cfg);

/// Build the ahead field of one side. The default validity box is
/// |t| <= 2 eps / eta0, |r - r0| <= 2 eps; eta0_hint comes from a preliminary
/// interaction-point solve.
std::shared_ptr<AheadField> make_field(const AheadSpec& spec, Side side, double r0,
                                       double epsilon, double eta0_hint);

IterationConfig iteration_config(const RunConfig& cfg);

/// Full problem assembly from a configuration: preliminary point solve for
/// the box default, field construction, interaction pipeline.
Problem make_problem(const RunConfig& cfg);

}  // namespace sphshock
