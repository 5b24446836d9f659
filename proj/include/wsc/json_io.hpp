#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wsc/battery.hpp"
#include "wsc/pipeline.hpp"

namespace wsc {

/// Stable conventions recorded in every report so outputs are reproducible
/// without reading the source.
nlohmann::json conventions_json(const RootDatum& rd);

nlohmann::json torus_weight_json(const TorusWeight& w);
nlohmann::json character_json(const FormalCharacter& fc);
nlohmann::json truncation_json(const TruncationSpec& spec);

nlohmann::json orbit_report_json(const NilpotentDatum& nd);
nlohmann::json verify_report_json(const std::vector<OrbitCheckResult>& results,
                                  std::size_t truncation);
nlohmann::json character_run_json(const NilpotentDatum& nd, const Weight& lambda,
                                  const CharacterRun& run);

std::string error_json(const Error& err);

/// Terms sorted by the truncation direction (leading terms first) for the
/// plain-text rendering "c * e^{w}".
std::string character_plaintext(const FormalCharacter& fc);

} // namespace wsc
