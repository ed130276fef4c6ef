#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qmac/run.hpp"

namespace {

// QMAC_DIM_CAP overrides the dimension cap from the environment.
std::optional<int> env_dim_cap() {
    const char* raw = std::getenv("QMAC_DIM_CAP");
    if (raw == nullptr) return std::nullopt;
    try {
        size_t used = 0;
        const int cap = std::stoi(raw, &used);
        if (used != std::string(raw).size() || cap < 1) throw std::invalid_argument(raw);
        return cap;
    } catch (const std::exception&) {
        std::cerr << "error: QMAC_DIM_CAP must be a positive integer, got \"" << raw
                  << "\"\n";
        std::exit(1);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale lab for the classical capacity of a quantum multiple access "
                 "channel: entropic rate bounds, capacity regions, two-stage decoder "
                 "simulation, and entanglement-assisted encodings."};
    app.require_subcommand(1);

    qmac::RunOptions opts;
    std::string config;
    std::string out;
    std::uint64_t seed = 0;
    int threads = 0;

    const auto add_command = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", config, "JSON run configuration")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", out, "output file (written atomically)");
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--seed", seed, "override the config seed")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--threads", threads, "worker threads for sampling and trials")
            ->check(CLI::PositiveNumber);
        return sub;
    };

    add_command("entropy", "joint and conditional entropies of an ensemble");
    add_command("region", "capacity region over product distributions");
    add_command("simulate", "two-stage decoder error probability");
    add_command("superdense", "entanglement-assisted encoding rate bounds");
    add_command("converse", "codebook entropy accounting and rate ceilings");
    add_command("check", "entropic invariant suite for an ensemble");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    opts.command = sub->get_name();
    opts.config_path = config;
    if (!out.empty()) opts.out_path = out;
    if (sub->count("--seed") > 0) opts.seed = seed;
    if (sub->count("--threads") > 0) opts.threads = threads;
    opts.dim_cap = env_dim_cap();

    return qmac::run_command(opts, std::cout, std::cerr);
}
