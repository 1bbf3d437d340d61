// zeta-region: compute the zero-free region constant and its supporting tables.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "zr/errors.hpp"
#include "zr/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Explicit zero-free region for the Riemann zeta function"};
    app.require_subcommand(1, 1);

    // Every option is kept as text and handed to apply_setting after the
    // config file, so command-line values win.
    std::map<std::string, std::string> flags;
    std::string config_path;
    bool single_step = false, omega_ratio = false;

    const std::map<std::string, std::string> options{
        {"theta", "kernel angle in (pi/2, pi)"},
        {"T0", "height of the verified Riemann hypothesis"},
        {"t0", "shift in the sigma0 logarithm"},
        {"R-init", "starting region constant"},
        {"schedule", "paper | auto | comma separated r values"},
        {"polynomial", "kadiri | rs | custom:c,c'"},
        {"format", "text | csv | json"},
        {"quad-abs-tol", "absolute quadrature tolerance"},
        {"root-tol", "bisection tolerance"},
        {"minimize-tol", "golden-section tolerance"},
        {"max-subdivisions", "quadrature subdivision cap"},
        {"kappa", "verify: kappa used in the pair test"},
        {"delta", "verify: delta used in the pair test"},
    };

    for (const char* name : {"constants", "iterate", "optimize-theta", "verify"}) {
        auto* sub = app.add_subcommand(name);
        for (const auto& [opt, help] : options) sub->add_option("--" + opt, flags[opt], help);
        sub->add_option("--config", config_path, "flat key=value file, overridden by flags");
        sub->add_flag("--single-step", single_step, "stop after one step");
        sub->add_flag("--omega-ratio", omega_ratio, "evaluate K at omega = r/R");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    zr::RunConfig cfg;
    try {
        cfg.command = zr::parse_command(app.get_subcommands().front()->get_name());
        if (!config_path.empty())
            for (const auto& [k, v] : zr::read_config_file(config_path)) zr::apply_setting(cfg, k, v);
        for (const auto& [k, v] : flags)
            if (!v.empty()) zr::apply_setting(cfg, k, v);
        if (single_step) cfg.single_step = true;
        if (omega_ratio) cfg.omega_ratio = true;
        cfg.validate();
    } catch (const zr::Error& e) {
        std::cerr << "zeta-region: " << e.what() << '\n';
        return 2;
    }

    const auto report = zr::run(cfg);
    std::cout << report.out;
    std::cerr << report.err;

    if (const char* dir = std::getenv("ZETA_REGION_OUT_DIR"); dir && *dir) {
        const char* ext = cfg.format == zr::OutputFormat::json  ? ".json"
                          : cfg.format == zr::OutputFormat::csv ? ".csv"
                                                                : ".txt";
        const auto path = std::filesystem::path(dir) / (std::string(zr::command_name(cfg.command)) + ext);
        std::filesystem::create_directories(path.parent_path());
        std::ofstream(path, std::ios::binary) << report.out;
    }
    return report.exit_code;
}
