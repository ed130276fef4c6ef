#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace qmac {

// One batch invocation: a command name, a JSON config document, and output
// routing. CLI-level flags (seed, threads, dimension cap) override the same
// keys in the config when present.
struct RunOptions {
    std::string command;  // entropy | region | simulate | superdense | converse | check
    std::filesystem::path config_path;
    std::optional<std::filesystem::path> out_path;  // default: primary output to `out`
    std::string format = "json";                    // json | csv
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::optional<int> dim_cap;
};

// Executes the command. The primary artifact goes to out_path (written
// atomically) or, without one, to `out`; diagnostics go to `err`. Returns the
// process exit status: 0 success, 1 invalid input, 2 computation error.
// Identical config and seed produce byte-identical JSON output.
int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qmac
