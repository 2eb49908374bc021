#include <iostream>

#include "CLI11.hpp"
#include "sphshock/cli.hpp"

using namespace sphshock;

int main(int argc, char** argv)
{
    CLI::App app{"spherical shock interaction solver"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int grid_n = 0;
    double epsilon = 0.0;
    double tol = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "configuration file (json)")->required();
        sub->add_option("--out", out_dir, "output directory override");
        sub->add_option("--grid-n", grid_n, "grid resolution override");
        sub->add_option("--epsilon", epsilon, "coordinate extent override");
        sub->add_option("--tol", tol, "fixed-point tolerance override");
    };

    CLI::App* riemann = app.add_subcommand("riemann", "interaction-point solve");
    CLI::App* solve = app.add_subcommand("solve", "full scheme run");
    CLI::App* validate = app.add_subcommand("validate", "validation suite");
    CLI::App* phi = app.add_subcommand("phi", "coordinate normalization demo");
    for (CLI::App* sub : {riemann, solve, validate, phi})
        add_common(sub);

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        cfg = load_config(config_path);
        if (!out_dir.empty())
            cfg.output_dir = out_dir;
        if (grid_n > 0)
            cfg.grid_n = grid_n;
        if (epsilon > 0.0)
            cfg.epsilon = epsilon;
        if (tol > 0.0)
            cfg.tol_fix = tol;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }

    if (riemann->parsed())
        return cmd_riemann(cfg, std::cout);
    if (solve->parsed())
        return cmd_solve(cfg, std::cout);
    if (validate->parsed())
        return cmd_validate(cfg, std::cout);
    return cmd_phi(cfg, std::cout);
}
