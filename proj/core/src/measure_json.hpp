#pragma once

#include <json.hpp>

#include "levyball/spectral.hpp"

namespace levyball::detail {

SpectralMeasure measure_from_json(const nlohmann::json& doc);
nlohmann::json measure_to_json(const SpectralMeasure& mu);

}  // namespace levyball::detail
