#pragma once

#include <string>

#include <json.hpp>

#include "bergkern/weights.hpp"

namespace bergkern {

// Parses {"family":..., ..., "domain":{...}}. Unknown fields are rejected.
// The domain may be omitted: mittag_leffler defaults to the plane,
// truncated_disk to the unit disk.
RadialWeightSpec weight_from_json(const nlohmann::json& j);
RadialWeightSpec weight_from_json_text(const std::string& text);

nlohmann::json weight_to_json(const RadialWeightSpec& spec);

// 17-significant-digit emission; reparses to an identical spec.
std::string weight_to_json_text(const RadialWeightSpec& spec);

}  // namespace bergkern
