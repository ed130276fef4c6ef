#include "qmac/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json_detail.hpp"
#include "qmac/errors.hpp"

namespace qmac {

namespace detail {

namespace {

void dump_value(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += json(it.key()).dump();
                out += ':';
                dump_value(it.value(), out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                dump_value(item, out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        default:
            // strings (with escaping), integers, booleans, null
            out += j.dump();
            break;
    }
}

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError("complex numbers must be two-element [re, im] arrays");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

ComplexVector vector_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        throw ConfigError("state vector length must equal dim");
    }
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_from_json(j[static_cast<size_t>(i)]);
    return v;
}

std::vector<std::string> strings_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError(what + " must be a nonempty array of strings");
    }
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw ConfigError(what + " must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<double> doubles_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw ConfigError(what + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& item : j) {
        if (!item.is_number()) throw ConfigError(what + " must contain only numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

const json& require_key(const json& j, const std::string& key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError("missing required key \"" + key + "\"");
    return *it;
}

json rate_pair_to_json(const RatePair& r) {
    return json::array({r.r1, r.r2});
}

}  // namespace

std::string dump_deterministic(const json& j) {
    std::string out;
    dump_value(j, out);
    return out;
}

json parse_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ConfigError("cannot parse " + what + ": " + ex.what());
    }
}

json ensemble_to_json(const SignalEnsemble& e) {
    json states = json::array();
    for (int ia = 0; ia < e.size_a(); ++ia) {
        json row = json::array();
        for (int ib = 0; ib < e.size_b(); ++ib) {
            row.push_back(vector_to_json(e.state(ia, ib)));
        }
        states.push_back(std::move(row));
    }
    return json{{"alphabet_a", e.alphabet_a}, {"alphabet_b", e.alphabet_b},
                {"dim", e.dim},               {"p", e.p},
                {"q", e.q},                   {"states", std::move(states)}};
}

SignalEnsemble ensemble_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("ensemble must be a JSON object");
    SignalEnsemble e;
    e.alphabet_a = strings_from_json(require_key(j, "alphabet_a"), "alphabet_a");
    e.alphabet_b = strings_from_json(require_key(j, "alphabet_b"), "alphabet_b");
    const json& dim = require_key(j, "dim");
    if (!dim.is_number_integer() || dim.get<int>() < 1) {
        throw ConfigError("dim must be a positive integer");
    }
    e.dim = dim.get<int>();
    e.p = doubles_from_json(require_key(j, "p"), "p");
    e.q = doubles_from_json(require_key(j, "q"), "q");
    const json& states = require_key(j, "states");
    if (!states.is_array() || states.size() != e.alphabet_a.size()) {
        throw ConfigError("states must hold one row per Alice letter");
    }
    for (const auto& row : states) {
        if (!row.is_array() || row.size() != e.alphabet_b.size()) {
            throw ConfigError("each states row must hold one vector per Bob letter");
        }
        for (const auto& vec : row) e.states.push_back(vector_from_json(vec, e.dim));
    }
    require_valid_ensemble(e);
    return e;
}

json codebook_to_json(const Codebook& cb) {
    return json{{"length_l", cb.length_l},
                {"alice_strings", cb.alice_strings},
                {"bob_strings", cb.bob_strings}};
}

Codebook codebook_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("codebook must be a JSON object");
    Codebook cb;
    const json& l = require_key(j, "length_l");
    if (!l.is_number_integer() || l.get<int>() < 1) {
        throw ConfigError("length_l must be a positive integer");
    }
    cb.length_l = l.get<int>();
    for (const auto& [field, target] :
         {std::pair{"alice_strings", &cb.alice_strings},
          std::pair{"bob_strings", &cb.bob_strings}}) {
        const json& rows = require_key(j, field);
        if (!rows.is_array() || rows.empty()) {
            throw ConfigError(std::string(field) + " must be a nonempty array");
        }
        for (const auto& row : rows) target->push_back(strings_from_json(row, field));
    }
    return cb;
}

json profile_to_json(const EntropyProfile& p) {
    return json{{"h_joint", p.h_joint},
                {"h_cond_alice", p.h_cond_alice},
                {"h_cond_bob", p.h_cond_bob}};
}

json region_to_json(const RateRegion& r) {
    json vertices = json::array();
    for (const auto& v : r.vertices) vertices.push_back(rate_pair_to_json(v));
    return json{{"vertices", std::move(vertices)}, {"area", region_area(r)}};
}

json decoding_to_json(const DecodingResult& r) {
    json success = json::array();
    for (Eigen::Index a = 0; a < r.success.rows(); ++a) {
        json row = json::array();
        for (Eigen::Index b = 0; b < r.success.cols(); ++b) row.push_back(r.success(a, b));
        success.push_back(std::move(row));
    }
    return json{{"p_error", r.p_error},
                {"p_error_per_a", r.p_error_per_a},
                {"success", std::move(success)}};
}

json stats_to_json(const RandomCodeStats& s) {
    return json{{"mean", s.mean}, {"stddev", s.stddev}, {"values", s.values}};
}

json ssa_to_json(const SsaWitnessReport& r) {
    return json{{"h_full", r.h_full},
                {"h_drop_b_flag", r.h_drop_b_flag},
                {"h_drop_a_flag", r.h_drop_a_flag},
                {"h_signal", r.h_signal},
                {"id_full_dev", r.id_full_dev},
                {"id_drop_b_dev", r.id_drop_b_dev},
                {"id_drop_a_dev", r.id_drop_a_dev},
                {"ssa_slack", r.ssa_slack}};
}

json converse_to_json(const ConverseReport& report, const ConverseBounds& bounds) {
    json per_position = json::array();
    for (const auto& p : report.per_position) per_position.push_back(profile_to_json(p));
    return json{
        {"h_code", report.h_code},
        {"h_code_a_avg", report.h_code_a_avg},
        {"h_code_aprime_avg", report.h_code_aprime_avg},
        {"per_position", std::move(per_position)},
        {"slack_joint", report.slack_joint()},
        {"slack_alice", report.slack_alice()},
        {"slack_bob", report.slack_bob()},
        {"bounds",
         json{{"r1_max", bounds.r1_max},
              {"r2_max", bounds.r2_max},
              {"rsum_max", bounds.rsum_max},
              {"vertex_alice", rate_pair_to_json(bounds.vertex_alice)},
              {"vertex_bob", rate_pair_to_json(bounds.vertex_bob)},
              {"vertices_in_pentagon", bounds.vertices_in_pentagon}}}};
}

json superdense_to_json(const SuperdenseReport& r) {
    return json{{"profile", profile_to_json(r.profile)},
                {"h_entanglement", r.h_entanglement},
                {"log2_n", r.log2_n},
                {"bound_single", r.bound_single},
                {"bound_sum", r.bound_sum},
                {"slack_alice", r.slack_alice},
                {"slack_bob", r.slack_bob},
                {"slack_sum", r.slack_sum}};
}

}  // namespace detail

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string ensemble_to_json_text(const SignalEnsemble& e) {
    return detail::dump_deterministic(detail::ensemble_to_json(e));
}

SignalEnsemble ensemble_from_json_text(const std::string& text) {
    return detail::ensemble_from_json(detail::parse_text(text, "ensemble"));
}

SignalEnsemble load_ensemble(const std::filesystem::path& path) {
    return ensemble_from_json_text(read_file(path));
}

std::string codebook_to_json_text(const Codebook& cb) {
    return detail::dump_deterministic(detail::codebook_to_json(cb));
}

Codebook codebook_from_json_text(const std::string& text) {
    return detail::codebook_from_json(detail::parse_text(text, "codebook"));
}

Codebook load_codebook(const std::filesystem::path& path) {
    return codebook_from_json_text(read_file(path));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw ConfigError("cannot read file: " + path.string());
    return buffer.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const auto parent = path.parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    const auto temp = path.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open output file: " + temp);
        out << content;
        out.flush();
        if (!out) throw ConfigError("cannot write output file: " + temp);
    }
    std::filesystem::rename(temp, path);
}

std::string region_to_csv(const RateRegion& region) {
    std::string out = "r1,r2\n";
    for (const auto& v : region.vertices) {
        out += format_double(v.r1) + "," + format_double(v.r2) + "\n";
    }
    return out;
}

std::string success_to_csv(const DecodingResult& result) {
    std::string out = "alice_index,bob_index,success\n";
    for (Eigen::Index a = 0; a < result.success.rows(); ++a) {
        for (Eigen::Index b = 0; b < result.success.cols(); ++b) {
            out += std::to_string(a) + "," + std::to_string(b) + "," +
                   format_double(result.success(a, b)) + "\n";
        }
    }
    return out;
}

std::string trials_to_csv(const RandomCodeStats& stats) {
    std::string out = "trial,p_error\n";
    for (size_t t = 0; t < stats.values.size(); ++t) {
        out += std::to_string(t) + "," + format_double(stats.values[t]) + "\n";
    }
    return out;
}

std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string out = "key,value\n";
    for (const auto& [key, value] : rows) {
        out += key + "," + value + "\n";
    }
    return out;
}

}  // namespace qmac
