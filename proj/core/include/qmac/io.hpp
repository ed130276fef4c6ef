#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qmac/coding.hpp"
#include "qmac/region.hpp"

namespace qmac {

// JSON text layer. Schemas are documented in the repository README; all
// serialization is deterministic: object keys sorted, floating-point values
// printed with 17 significant digits, complex numbers as [re, im] pairs.
// Parse failures throw ConfigError.

std::string ensemble_to_json_text(const SignalEnsemble& e);
SignalEnsemble ensemble_from_json_text(const std::string& text);
SignalEnsemble load_ensemble(const std::filesystem::path& path);

std::string codebook_to_json_text(const Codebook& cb);
Codebook codebook_from_json_text(const std::string& text);
Codebook load_codebook(const std::filesystem::path& path);

// Whole-file read; throws ConfigError when unreadable.
std::string read_file(const std::filesystem::path& path);

// Writes content to a sibling temporary file and renames it into place, so a
// failed run never leaves a partial artifact. Parent directories are created.
void write_atomic(const std::filesystem::path& path, const std::string& content);

// CSV projections (formats documented in the README).
std::string region_to_csv(const RateRegion& region);
std::string success_to_csv(const DecodingResult& result);
std::string trials_to_csv(const RandomCodeStats& stats);
std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows);

// 17-significant-digit shortest-width rendering used everywhere a double is
// printed (JSON and CSV), so text output is reproducible bit for bit.
std::string format_double(double v);

}  // namespace qmac
