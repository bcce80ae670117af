#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "obstruction.hpp"

namespace ckforms {

// Key order is fixed so reports are byte-stable; timing is attached only on
// request because repeated runs must produce identical bytes by default.
nlohmann::ordered_json build_report(const PairSpec& pair, const std::string& description,
                                    const ObstructionResult& result, const CheckOptions& opts,
                                    std::optional<double> timing_ms = std::nullopt);

std::string render_text(const PairSpec& pair, const std::string& description,
                        const ObstructionResult& result, const CheckOptions& opts,
                        std::optional<double> timing_ms = std::nullopt);

}  // namespace ckforms
