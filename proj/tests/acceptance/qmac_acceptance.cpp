// Acceptance gate for the artifact: one [PASS]/[FAIL] line per criterion,
// nonzero exit when anything fails. argv[1] = path to the qmac binary,
// argv[2] = path to the data directory (ensembles + command configs).
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qmac/coding.hpp"
#include "qmac/converse.hpp"
#include "qmac/entropy.hpp"
#include "qmac/errors.hpp"
#include "qmac/io.hpp"
#include "qmac/region.hpp"
#include "qmac/superdense.hpp"

#include "../test_support.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qmac;
using qmac::testing::classical_ensemble;
using qmac::testing::mub_ensemble;

constexpr double kHa = 0.60087603669285616;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int number = 0;
    std::string title;
    double time_limit_s = 0.0;  // 0 = no limit
    std::function<Outcome()> body;
};

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// ---------------------------------------------------------------- criterion 1
Outcome entropies_of_named_ensemble() {
    const EntropyProfile p = conditional_entropies(mub_ensemble());
    if (std::abs(p.h_joint - 1.0) > 1e-6) {
        return fail("h_joint = " + fmt(p.h_joint) + ", want 1.0");
    }
    if (std::abs(p.h_cond_bob - 1.0) > 1e-6) {
        return fail("h_cond_bob = " + fmt(p.h_cond_bob) + ", want 1.0");
    }
    if (std::abs(p.h_cond_alice - kHa) > 1e-6) {
        return fail("h_cond_alice = " + fmt(p.h_cond_alice) + ", want 0.600876");
    }
    return pass("h = 1, h_cond_alice = 0.600876, h_cond_bob = 1 within 1e-6");
}

// ---------------------------------------------------------------- criterion 2
Outcome entropy_bound_sweep() {
    constexpr int kEnsembles = 1000;
    constexpr int kWitnessed = 100;
    constexpr double tol = 1e-9;
    int bound_violations = 0;
    int witness_violations = 0;
    for (int t = 0; t < kEnsembles; ++t) {
        auto gen = trial_stream(1002, static_cast<std::uint64_t>(t));
        const int dim = 2 + static_cast<int>(gen() % 7);       // 2..8
        const int na = 1 + static_cast<int>(gen() % 4);        // 1..4
        const int nb = 1 + static_cast<int>(gen() % 4);
        const SignalEnsemble e = qmac::testing::random_ensemble(gen, dim, na, nb);
        if (!validate_ensemble(e).empty()) {
            ++bound_violations;
            continue;
        }
        const EntropyProfile p = conditional_entropies(e);
        const bool ok = p.h_cond_alice + p.h_cond_bob >= p.h_joint - tol &&
                        p.h_cond_alice <= p.h_joint + tol &&
                        p.h_cond_bob <= p.h_joint + tol;
        if (!ok) ++bound_violations;
        if (t < kWitnessed) {
            const SsaWitnessReport w = ssa_witness_check(e);
            if (w.id_full_dev > tol || w.id_drop_b_dev > tol ||
                w.id_drop_a_dev > tol || w.ssa_slack < -tol) {
                ++witness_violations;
            }
        }
    }
    if (bound_violations > 0 || witness_violations > 0) {
        return fail(std::to_string(bound_violations) + " bound and " +
                    std::to_string(witness_violations) + " witness violations");
    }
    return pass("1000 ensembles, bounds clean; witness identities clean on 100");
}

// ---------------------------------------------------------------- criterion 3
Outcome pentagon_geometry() {
    const RateRegion region = pentagon(conditional_entropies(mub_ensemble()));
    const std::vector<RatePair> want = {
        {0.0, 0.0}, {0.600876, 0.0}, {0.600876, 0.399124}, {0.0, 1.0}};
    if (region.vertices.size() != want.size()) {
        return fail("vertex count " + std::to_string(region.vertices.size()) +
                    ", want 4");
    }
    for (size_t i = 0; i < want.size(); ++i) {
        if (std::abs(region.vertices[i].r1 - want[i].r1) > 1e-6 ||
            std::abs(region.vertices[i].r2 - want[i].r2) > 1e-6) {
            return fail("vertex " + std::to_string(i) + " = (" +
                        fmt(region.vertices[i].r1) + ", " +
                        fmt(region.vertices[i].r2) + ")");
        }
    }
    if (!contains(region, {0.3, 0.5}, 1e-6)) return fail("(0.3, 0.5) not inside");
    if (contains(region, {0.6, 0.6}, 1e-6)) return fail("(0.6, 0.6) not outside");
    return pass("four vertices within 1e-6; membership answers correct");
}

// ---------------------------------------------------------------- criterion 4
Outcome classical_limit() {
    SamplerPlan plan;
    plan.grid_step = 0.05;
    const RateRegion region = region_union(classical_ensemble(), plan);
    const std::vector<RatePair> want = {
        {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    if (region.vertices.size() != want.size()) {
        return fail("sweep gave " + std::to_string(region.vertices.size()) +
                    " vertices, want the unit square");
    }
    for (size_t i = 0; i < want.size(); ++i) {
        if (std::abs(region.vertices[i].r1 - want[i].r1) > 1e-3 ||
            std::abs(region.vertices[i].r2 - want[i].r2) > 1e-3) {
            return fail("square vertex " + std::to_string(i) + " off by more than 1e-3");
        }
    }

    const SignalEnsemble e = classical_ensemble();
    std::vector<Codebook> books(3);
    books[0].length_l = 1;
    books[0].alice_strings = {{"A"}, {"B"}};
    books[0].bob_strings = {{"C"}, {"D"}};
    books[1].length_l = 2;
    books[1].alice_strings = {{"A", "A"}, {"A", "B"}, {"B", "A"}, {"B", "B"}};
    books[1].bob_strings = {{"C", "C"}, {"C", "D"}, {"D", "C"}, {"D", "D"}};
    books[2].length_l = 3;
    books[2].alice_strings = {{"A", "A", "B"}, {"A", "B", "A"}};
    books[2].bob_strings = {{"C", "C", "C"}, {"D", "C", "D"}, {"C", "D", "C"}};
    for (const Codebook& cb : books) {
        const double p_error = error_probability(e, cb, 0.5).p_error;
        if (std::abs(p_error) > 1e-9) {
            return fail("distinct codebook with L = " + std::to_string(cb.length_l) +
                        " gave P_E = " + fmt(p_error));
        }
    }
    return pass("unit square within 1e-3; distinct codebooks decode with P_E = 0");
}

// ---------------------------------------------------------------- criterion 5
Outcome decoder_exactness() {
    constexpr int kInstances = 20;
    double worst = 0.0;
    for (int t = 0; t < kInstances; ++t) {
        auto gen = trial_stream(1005, static_cast<std::uint64_t>(t));
        const int na = 2 + static_cast<int>(gen() % 3);  // 2..4
        const int nb = 2 + static_cast<int>(gen() % 3);
        const SignalEnsemble e = qmac::testing::random_ensemble(gen, 2, na, nb);
        const int l = 1 + static_cast<int>(gen() % 3);   // 1..3
        const int m = 1 + static_cast<int>(gen() % 4);   // 1..4
        const int n = 1 + static_cast<int>(gen() % 4);
        const Codebook cb = qmac::testing::random_codebook(gen, e, l, m, n);
        const double deltas[] = {0.2, 0.5, 1.0};
        const double delta = deltas[gen() % 3];
        const double got = error_probability(e, cb, delta).p_error;
        const double want = qmac::testing::reference::brute_force_p_error(e, cb, delta);
        worst = std::max(worst, std::abs(got - want));
        if (std::abs(got - want) > 1e-9) {
            return fail("instance " + std::to_string(t) + ": decoder " + fmt(got) +
                        " vs reference " + fmt(want));
        }
    }
    return pass("20 instances agree with the straight-line reference; worst gap " +
                fmt(worst));
}

// ---------------------------------------------------------------- criterion 6
Outcome random_coding_trend() {
    constexpr int kTrials = 4000;
    constexpr int kThreads = 4;
    std::vector<double> means;
    std::vector<double> std_errors;
    std::string summary;
    for (int l = 2; l <= 5; ++l) {
        const std::vector<LetterString> alice = {
            LetterString(static_cast<size_t>(l), "A")};
        const RandomCodeStats stats =
            random_code_average(mub_ensemble(), alice, 2, l, 1.0, kTrials,
                                1006 + static_cast<std::uint64_t>(l),
                                kDefaultDimCap, kThreads);
        means.push_back(stats.mean);
        std_errors.push_back(stats.stddev / std::sqrt(static_cast<double>(kTrials)));
        if (!summary.empty()) summary += ", ";
        summary += "L" + std::to_string(l) + " = " + fmt(stats.mean);
    }
    for (size_t i = 0; i + 1 < means.size(); ++i) {
        const double diff = means[i] - means[i + 1];
        const double sigma = std::sqrt(std_errors[i] * std_errors[i] +
                                       std_errors[i + 1] * std_errors[i + 1]);
        if (diff <= 3.0 * sigma) {
            return fail("L" + std::to_string(i + 2) + " -> L" + std::to_string(i + 3) +
                        " drop " + fmt(diff) + " is below 3 sigma = " +
                        fmt(3.0 * sigma));
        }
    }
    return pass("mean P_E falls monotonically at 3 sigma (" + summary + ")");
}

// ---------------------------------------------------------------- criterion 7
Outcome converse_suite() {
    constexpr int kBooks = 100;
    constexpr double tol = 1e-9;
    for (int t = 0; t < kBooks; ++t) {
        auto gen = trial_stream(1007, static_cast<std::uint64_t>(t));
        const int na = 2 + static_cast<int>(gen() % 2);
        const int nb = 2 + static_cast<int>(gen() % 2);
        const SignalEnsemble e = qmac::testing::random_ensemble(gen, 2, na, nb);
        const int l = 1 + static_cast<int>(gen() % 3);
        const int m = 1 + static_cast<int>(gen() % 3);
        const int n = 1 + static_cast<int>(gen() % 3);
        const Codebook cb = qmac::testing::random_codebook(gen, e, l, m, n);
        const ConverseReport report = codebook_entropies(e, cb);
        if (report.slack_joint() < -tol || report.slack_alice() < -tol ||
            report.slack_bob() < -tol) {
            return fail("codebook " + std::to_string(t) + " breaks subadditivity");
        }
        const ConverseBounds bounds = converse_bounds(report, l);
        if (!bounds.vertices_in_pentagon) {
            return fail("codebook " + std::to_string(t) +
                        " has an outmost vertex outside the averaged pentagon");
        }
    }
    return pass("100 random codebooks: subadditivity clean, vertices inside");
}

// ---------------------------------------------------------------- criterion 8
Outcome superdense_corners() {
    const SchmidtState bell{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}};
    const UnitaryEnsemble full = pauli_ensemble(2, true, true);
    const UnitaryEnsemble id_only = pauli_ensemble(2, false, false);

    const SuperdenseReport both = superdense_rate_bounds(bell, full, full);
    if (std::abs(both.profile.h_joint - 2.0) > 1e-9) {
        return fail("full/full h_joint = " + fmt(both.profile.h_joint));
    }
    const SuperdenseReport corner = superdense_rate_bounds(bell, full, id_only);
    if (std::abs(corner.profile.h_cond_alice - 2.0) > 1e-9 ||
        std::abs(corner.bound_single - 2.0) > 1e-9 ||
        std::abs(corner.profile.h_cond_bob) > 1e-9) {
        return fail("alice-corner profile off: h_cond_alice = " +
                    fmt(corner.profile.h_cond_alice));
    }

    constexpr int kStates = 100;
    for (int t = 0; t < kStates; ++t) {
        auto gen = trial_stream(1008, static_cast<std::uint64_t>(t));
        const int n = 2 + static_cast<int>(gen() % 2);
        SchmidtState s;
        for (const double p : sample_simplex(gen, n)) {
            s.amplitudes.push_back(std::sqrt(p));
        }
        const auto pick_family = [&](std::mt19937_64& g) {
            switch (g() % 3) {
                case 0: return pauli_ensemble(n, (g() % 2) == 0, true);
                case 1: return pauli_ensemble(n, true, (g() % 2) == 0);
                default: return permutation_phase_ensemble(n, (g() % 2) == 0);
            }
        };
        const UnitaryEnsemble ens_a = pick_family(gen);
        const UnitaryEnsemble ens_b = pick_family(gen);
        const SuperdenseReport r = superdense_rate_bounds(s, ens_a, ens_b);
        if (r.slack_alice < -1e-9 || r.slack_bob < -1e-9 || r.slack_sum < -1e-9) {
            return fail("state " + std::to_string(t) + " breaks a rate ceiling");
        }
    }
    return pass("named corners exact; 100 random states obey every ceiling");
}

// ---------------------------------------------------------------- criterion 9
struct CliEnv {
    std::string binary;
    fs::path data_dir;
    fs::path work_dir;
};

int run_cli(const CliEnv& env, const std::string& command, const fs::path& config,
            const fs::path& out) {
    const std::string line = "\"" + env.binary + "\" " + command + " --config \"" +
                             config.string() + "\" --out \"" + out.string() + "\"";
    return std::system(line.c_str());
}

Outcome determinism(const CliEnv& env) {
    fs::remove_all(env.work_dir);
    fs::create_directories(env.work_dir);
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"region", "region_mub.json"},
        {"simulate", "simulate_random.json"},
    };
    for (const auto& [command, config_name] : cases) {
        const fs::path config = env.data_dir / "configs" / config_name;
        const fs::path first = env.work_dir / (command + "_1.json");
        const fs::path second = env.work_dir / (command + "_2.json");
        if (run_cli(env, command, config, first) != 0 ||
            run_cli(env, command, config, second) != 0) {
            return fail(command + " run failed under " + config.string());
        }
        const std::string a = read_file(first);
        const std::string b = read_file(second);
        if (a.empty() || a != b) {
            return fail(command + " reruns differ byte-wise");
        }
    }
    return pass("region and simulate reruns are byte-identical JSON");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: qmac_acceptance <qmac-binary> <data-dir>\n";
        return 2;
    }
    CliEnv env;
    env.binary = argv[1];
    env.data_dir = fs::path(argv[2]);
    env.work_dir = fs::temp_directory_path() / "qmac_acceptance";

    const std::vector<Criterion> criteria = {
        {1, "named-ensemble entropies", 1.0, entropies_of_named_ensemble},
        {2, "entropy bound sweep", 120.0, entropy_bound_sweep},
        {3, "pentagon geometry", 0.0, pentagon_geometry},
        {4, "classical limit", 0.0, classical_limit},
        {5, "decoder exactness", 300.0, decoder_exactness},
        {6, "random-coding trend", 600.0, random_coding_trend},
        {7, "converse entropic suite", 0.0, converse_suite},
        {8, "superdense corners", 60.0, superdense_corners},
        {9, "seeded determinism", 0.0, [&env] { return determinism(env); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& ex) {
            outcome = fail(std::string("exception: ") + ex.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (outcome.pass && c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
            outcome = fail("took " + fmt(elapsed) + " s, limit " +
                           fmt(c.time_limit_s) + " s");
        }
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number
                  << " (" << c.title << ", " << fmt(elapsed) << " s): "
                  << outcome.detail << "\n";
        if (!outcome.pass) ++failures;
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 9 criteria passed\n";
    return 0;
}
