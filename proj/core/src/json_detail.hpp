// Internal bridge between the public structs and nlohmann::json documents.
// Not installed; the public API (io.hpp, run.hpp) trades in plain strings.
#pragma once

#include <json.hpp>

#include "qmac/coding.hpp"
#include "qmac/converse.hpp"
#include "qmac/entropy.hpp"
#include "qmac/region.hpp"
#include "qmac/superdense.hpp"

namespace qmac::detail {

using nlohmann::json;

// Serializes with sorted object keys (json's default object storage), doubles
// via format_double, and no added whitespace. Identical documents always
// produce identical bytes.
std::string dump_deterministic(const json& j);

json parse_text(const std::string& text, const std::string& what);

json ensemble_to_json(const SignalEnsemble& e);
SignalEnsemble ensemble_from_json(const json& j);

json codebook_to_json(const Codebook& cb);
Codebook codebook_from_json(const json& j);

json profile_to_json(const EntropyProfile& p);
json region_to_json(const RateRegion& r);
json decoding_to_json(const DecodingResult& r);
json stats_to_json(const RandomCodeStats& s);
json ssa_to_json(const SsaWitnessReport& r);
json converse_to_json(const ConverseReport& report, const ConverseBounds& bounds);
json superdense_to_json(const SuperdenseReport& r);

}  // namespace qmac::detail
