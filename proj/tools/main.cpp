#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "darboux/errors.hpp"
#include "darboux/parallel.hpp"

int main(int argc, char** argv) {
    using namespace darboux;

    CLI::App app{"SUSY/Darboux transformations of half-line Schroedinger operators"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<double> epsilon;
    bool override_sign = false;
    for (const auto& name : cli::command_names()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "YAML run configuration")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
        sub->add_option("--epsilon", epsilon, "regularization epsilon (overrides the config)");
        sub->add_flag("--override-epsilon-sign", override_sign, "use epsilon as given instead of sign(b)|epsilon|");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kError;
    }

    if (const char* env = std::getenv("DARBOUX_THREADS")) {
        try {
            parallel::set_worker_limit(static_cast<unsigned>(std::stoul(env)));
        } catch (const std::exception&) {
            std::cerr << "error: DARBOUX_THREADS must be a non-negative integer\n";
            return cli::kError;
        }
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        cli::RunConfig config = cli::load_config(config_path);
        if (out_dir) config.out_dir = *out_dir;
        if (epsilon) config.regularization.epsilon = *epsilon;
        if (override_sign) config.regularization.override_sign = true;
        return cli::run_command(command, config, std::cout);
    } catch (const Error& e) {
        std::cerr << "error [" << command << ", " << config_path << "]: " << e.what() << "\n";
        return cli::kError;
    } catch (const std::exception& e) {
        std::cerr << "error [" << command << ", " << config_path << "]: " << e.what() << "\n";
        return cli::kError;
    }
}
