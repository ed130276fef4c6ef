#include "qmac/run.hpp"

#include <cmath>

#include "json_detail.hpp"
#include "qmac/coding.hpp"
#include "qmac/converse.hpp"
#include "qmac/entropy.hpp"
#include "qmac/errors.hpp"
#include "qmac/io.hpp"
#include "qmac/region.hpp"
#include "qmac/superdense.hpp"

namespace qmac {

namespace {

using detail::json;

struct Payload {
    std::string json_text;
    std::string csv_text;
};

struct CommandContext {
    json config;
    std::filesystem::path config_dir;
    const RunOptions* opts = nullptr;
    int dim_cap = kDefaultDimCap;
};

int config_int(const CommandContext& ctx, const std::string& key, int fallback) {
    const auto it = ctx.config.find(key);
    if (it == ctx.config.end()) return fallback;
    if (!it->is_number_integer()) throw ConfigError("\"" + key + "\" must be an integer");
    return it->get<int>();
}

double config_double(const CommandContext& ctx, const std::string& key, double fallback) {
    const auto it = ctx.config.find(key);
    if (it == ctx.config.end()) return fallback;
    if (!it->is_number()) throw ConfigError("\"" + key + "\" must be a number");
    return it->get<double>();
}

std::optional<std::uint64_t> resolve_seed(const CommandContext& ctx) {
    if (ctx.opts->seed) return ctx.opts->seed;
    const auto it = ctx.config.find("seed");
    if (it == ctx.config.end()) return std::nullopt;
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
        throw ConfigError("\"seed\" must be a nonnegative integer");
    }
    return it->get<std::uint64_t>();
}

int resolve_threads(const CommandContext& ctx) {
    const int threads =
        ctx.opts->threads ? *ctx.opts->threads : config_int(ctx, "threads", 1);
    if (threads < 1) throw ConfigError("threads must be >= 1");
    return threads;
}

SignalEnsemble resolve_ensemble(const CommandContext& ctx) {
    const bool inline_spec = ctx.config.contains("ensemble");
    const bool file_spec = ctx.config.contains("ensemble_file");
    if (inline_spec == file_spec) {
        throw ConfigError("config needs exactly one of \"ensemble\" or \"ensemble_file\"");
    }
    if (inline_spec) return detail::ensemble_from_json(ctx.config.at("ensemble"));
    const auto& rel = ctx.config.at("ensemble_file");
    if (!rel.is_string()) throw ConfigError("\"ensemble_file\" must be a path string");
    return load_ensemble(ctx.config_dir / rel.get<std::string>());
}

std::optional<Codebook> resolve_codebook(const CommandContext& ctx) {
    const bool inline_spec = ctx.config.contains("codebook");
    const bool file_spec = ctx.config.contains("codebook_file");
    if (inline_spec && file_spec) {
        throw ConfigError("config may hold \"codebook\" or \"codebook_file\", not both");
    }
    if (inline_spec) return detail::codebook_from_json(ctx.config.at("codebook"));
    if (file_spec) {
        const auto& rel = ctx.config.at("codebook_file");
        if (!rel.is_string()) throw ConfigError("\"codebook_file\" must be a path string");
        return load_codebook(ctx.config_dir / rel.get<std::string>());
    }
    return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> profile_rows(const EntropyProfile& p) {
    return {{"h_joint", format_double(p.h_joint)},
            {"h_cond_alice", format_double(p.h_cond_alice)},
            {"h_cond_bob", format_double(p.h_cond_bob)}};
}

Payload run_entropy(const CommandContext& ctx) {
    const SignalEnsemble e = resolve_ensemble(ctx);
    const EntropyProfile profile = conditional_entropies(e);
    return {detail::dump_deterministic(detail::profile_to_json(profile)),
            key_value_csv(profile_rows(profile))};
}

Payload run_region(const CommandContext& ctx) {
    const SignalEnsemble e = resolve_ensemble(ctx);
    SamplerPlan plan;
    plan.grid_step = config_double(ctx, "grid_step", plan.grid_step);
    plan.random_samples = config_int(ctx, "random_samples", plan.random_samples);
    plan.seed = resolve_seed(ctx);
    plan.threads = resolve_threads(ctx);
    if (plan.random_samples > 0 && !plan.seed) {
        throw ConfigError("\"seed\" is required when random_samples > 0");
    }
    const RateRegion region = region_union(e, plan);
    return {detail::dump_deterministic(detail::region_to_json(region)),
            region_to_csv(region)};
}

Payload run_simulate(const CommandContext& ctx) {
    const SignalEnsemble e = resolve_ensemble(ctx);
    const double delta = config_double(ctx, "delta", kDefaultDelta);
    if (const auto cb = resolve_codebook(ctx)) {
        const DecodingResult result = error_probability(e, *cb, delta, ctx.dim_cap);
        return {detail::dump_deterministic(detail::decoding_to_json(result)),
                success_to_csv(result)};
    }
    // Random-code mode: fixed Alice strings, Bob's codebook drawn per trial.
    const auto it = ctx.config.find("alice_strings");
    if (it == ctx.config.end()) {
        throw ConfigError(
            "simulate needs a \"codebook\"/\"codebook_file\" or \"alice_strings\"");
    }
    if (!it->is_array() || it->empty()) {
        throw ConfigError("\"alice_strings\" must be a nonempty array of letter arrays");
    }
    std::vector<LetterString> alice;
    for (const auto& row : *it) {
        if (!row.is_array()) {
            throw ConfigError("each Alice string must be an array of letters");
        }
        LetterString s;
        for (const auto& letter : row) {
            if (!letter.is_string()) throw ConfigError("letters must be strings");
            s.push_back(letter.get<std::string>());
        }
        alice.push_back(std::move(s));
    }
    const int n = config_int(ctx, "n", 0);
    const int l = config_int(ctx, "length_l", 0);
    const int trials = config_int(ctx, "trials", 0);
    const auto seed = resolve_seed(ctx);
    if (!seed) throw ConfigError("\"seed\" is required for random-code simulation");
    const RandomCodeStats stats = random_code_average(
        e, alice, n, l, delta, trials, *seed, ctx.dim_cap, resolve_threads(ctx));
    return {detail::dump_deterministic(detail::stats_to_json(stats)),
            trials_to_csv(stats)};
}

UnitaryEnsemble resolve_unitary_family(const json& spec, int n) {
    if (!spec.is_object()) throw ConfigError("unitary family spec must be an object");
    const std::string family = spec.value("family", "pauli");
    if (family == "pauli") {
        return pauli_ensemble(n, spec.value("shifts", true), spec.value("phases", true));
    }
    if (family == "permutation") {
        return permutation_phase_ensemble(n, spec.value("phases", true));
    }
    throw ConfigError("unknown unitary family \"" + family + "\"");
}

Payload run_superdense(const CommandContext& ctx) {
    const auto it = ctx.config.find("schmidt");
    if (it == ctx.config.end() || !it->is_object() || !it->contains("amplitudes")) {
        throw ConfigError("superdense needs \"schmidt\": {\"amplitudes\": [...]}");
    }
    SchmidtState state;
    for (const auto& a : it->at("amplitudes")) {
        if (!a.is_number()) throw ConfigError("amplitudes must be numbers");
        state.amplitudes.push_back(a.get<double>());
    }
    require_valid_schmidt(state);
    const json default_family = json::object();
    const UnitaryEnsemble ens_a = resolve_unitary_family(
        ctx.config.value("alice_unitaries", default_family), state.local_dim());
    const UnitaryEnsemble ens_b = resolve_unitary_family(
        ctx.config.value("bob_unitaries", default_family), state.local_dim());

    const SuperdenseReport report = superdense_rate_bounds(state, ens_a, ens_b);
    json doc = detail::superdense_to_json(report);
    if (ctx.config.value("emit_ensemble", false)) {
        doc["ensemble"] = detail::ensemble_to_json(superdense_ensemble(state, ens_a, ens_b));
    }
    std::vector<std::pair<std::string, std::string>> rows = profile_rows(report.profile);
    rows.insert(rows.end(),
                {{"h_entanglement", format_double(report.h_entanglement)},
                 {"log2_n", format_double(report.log2_n)},
                 {"bound_single", format_double(report.bound_single)},
                 {"bound_sum", format_double(report.bound_sum)},
                 {"slack_alice", format_double(report.slack_alice)},
                 {"slack_bob", format_double(report.slack_bob)},
                 {"slack_sum", format_double(report.slack_sum)}});
    return {detail::dump_deterministic(doc), key_value_csv(rows)};
}

Payload run_converse(const CommandContext& ctx) {
    const SignalEnsemble e = resolve_ensemble(ctx);
    const auto cb = resolve_codebook(ctx);
    if (!cb) throw ConfigError("converse needs a \"codebook\" or \"codebook_file\"");
    const ConverseReport report = codebook_entropies(e, *cb, ctx.dim_cap);
    const ConverseBounds bounds = converse_bounds(report, cb->length_l);
    std::vector<std::pair<std::string, std::string>> rows = {
        {"h_code", format_double(report.h_code)},
        {"h_code_a_avg", format_double(report.h_code_a_avg)},
        {"h_code_aprime_avg", format_double(report.h_code_aprime_avg)},
        {"slack_joint", format_double(report.slack_joint())},
        {"slack_alice", format_double(report.slack_alice())},
        {"slack_bob", format_double(report.slack_bob())},
        {"r1_max", format_double(bounds.r1_max)},
        {"r2_max", format_double(bounds.r2_max)},
        {"rsum_max", format_double(bounds.rsum_max)},
        {"vertices_in_pentagon", bounds.vertices_in_pentagon ? "1" : "0"}};
    return {detail::dump_deterministic(detail::converse_to_json(report, bounds)),
            key_value_csv(rows)};
}

Payload run_check(const CommandContext& ctx) {
    const SignalEnsemble e = resolve_ensemble(ctx);
    const EntropyProfile profile = conditional_entropies(e);

    constexpr double tol = 1e-9;
    const bool concavity_ok = profile.h_cond_alice <= profile.h_joint + tol &&
                              profile.h_cond_bob <= profile.h_joint + tol;
    const bool lemma_ok =
        profile.h_cond_alice + profile.h_cond_bob >= profile.h_joint - tol;
    const SsaWitnessReport ssa = ssa_witness_check(e, ctx.dim_cap);
    const bool ssa_ok = ssa.id_full_dev <= tol && ssa.id_drop_b_dev <= tol &&
                        ssa.id_drop_a_dev <= tol && ssa.ssa_slack >= -tol;
    const bool pass = concavity_ok && lemma_ok && ssa_ok;

    json doc{{"profile", detail::profile_to_json(profile)},
             {"concavity_ok", concavity_ok},
             {"lemma_ok", lemma_ok},
             {"ssa", detail::ssa_to_json(ssa)},
             {"ssa_ok", ssa_ok},
             {"pass", pass}};
    std::vector<std::pair<std::string, std::string>> rows = profile_rows(profile);
    rows.insert(rows.end(), {{"concavity_ok", concavity_ok ? "1" : "0"},
                             {"lemma_ok", lemma_ok ? "1" : "0"},
                             {"ssa_slack", format_double(ssa.ssa_slack)},
                             {"ssa_ok", ssa_ok ? "1" : "0"},
                             {"pass", pass ? "1" : "0"}});
    if (!pass) throw ComputationError("ensemble failed the invariant suite");
    return {detail::dump_deterministic(doc), key_value_csv(rows)};
}

}  // namespace

int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.format != "json" && opts.format != "csv") {
            throw ConfigError("format must be \"json\" or \"csv\"");
        }
        CommandContext ctx;
        ctx.config = detail::parse_text(read_file(opts.config_path), "config");
        if (!ctx.config.is_object()) throw ConfigError("config must be a JSON object");
        ctx.config_dir = opts.config_path.parent_path();
        ctx.opts = &opts;
        ctx.dim_cap = opts.dim_cap ? *opts.dim_cap
                                   : config_int(ctx, "dimension_cap", kDefaultDimCap);
        if (ctx.dim_cap < 1) throw ConfigError("dimension cap must be >= 1");

        Payload payload;
        if (opts.command == "entropy") {
            payload = run_entropy(ctx);
        } else if (opts.command == "region") {
            payload = run_region(ctx);
        } else if (opts.command == "simulate") {
            payload = run_simulate(ctx);
        } else if (opts.command == "superdense") {
            payload = run_superdense(ctx);
        } else if (opts.command == "converse") {
            payload = run_converse(ctx);
        } else if (opts.command == "check") {
            payload = run_check(ctx);
        } else {
            throw ConfigError("unknown command \"" + opts.command + "\"");
        }

        std::string text =
            opts.format == "json" ? payload.json_text + "\n" : payload.csv_text;
        if (opts.out_path) {
            write_atomic(*opts.out_path, text);
        } else {
            out << text;
        }
        return 0;
    } catch (const InvalidInputError& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const detail::json::exception& ex) {
        // malformed config shapes surface as library type errors
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const ComputationError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

}  // namespace qmac
