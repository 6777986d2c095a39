#pragma once

#include <json.hpp>

#include "trivex/platonic/duality.hpp"
#include "trivex/spectral/report.hpp"
#include "trivex/surface/report.hpp"

namespace trivex::app {

nlohmann::json to_json(const spectral::SpectrumReport& r);
spectral::SpectrumReport spectrum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const surface::SurfaceReport& r);
nlohmann::json to_json(const platonic::DualityVerdict& v);

}  // namespace trivex::app
