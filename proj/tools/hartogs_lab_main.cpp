#include <CLI11.hpp>
#include <iostream>

#include "hartogs/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hartogs-lab: weighted-moment, Bergman, Hankel and ground-state "
                 "experiments on Hartogs domains"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run an experiment from a config file");
    std::string config_path, out_dir, modes;
    int jobs = 0, resolution = 0;
    run_cmd->add_option("config", config_path, "INI-style config file")->required();
    run_cmd->add_option("--jobs", jobs, "parallel workers for per-mode sweeps");
    run_cmd->add_option("--out", out_dir, "output directory");
    run_cmd->add_option("--modes", modes, "mode range A..B or comma list");
    run_cmd->add_option("--resolution", resolution, "grid resolution override");

    CLI11_PARSE(app, argc, argv);

    try {
        hartogs::ExperimentConfig cfg = hartogs::parse_config_file(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!modes.empty()) cfg.modes = hartogs::parse_mode_list(modes);
        if (jobs > 0) cfg.jobs = jobs;
        if (resolution > 0) cfg.resolution = resolution;
        hartogs::RunResult rr = hartogs::run(cfg);
        std::cout << rr.message << "\n";
        return rr.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
