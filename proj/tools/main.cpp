#include "chiralq_app/config.hpp"
#include "chiralq_app/runner.hpp"

#include <CLI11.hpp>

#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Chiral Maxwell kernels, convolution solver and verification runs"};
    std::string kind;
    std::string config;
    std::string out;
    unsigned threads = 1;
    app.add_option("run-kind", kind, "fundamental | fourier-check | kernel-check | solve | verify")
        ->required()
        ->check(CLI::IsMember({"fundamental", "fourier-check", "kernel-check", "solve", "verify"}));
    app.add_option("--config", config, "JSON run configuration")->required();
    app.add_option("--out", out, "CSV output path (default: config 'output', else stdout)");
    app.add_option("--threads", threads, "worker threads; CHIRALQ_THREADS overrides")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return chiralq::app::kExitConfig;
    }
    return chiralq::app::run_command(chiralq::app::parse_run_kind(kind), config, out, threads);
}
