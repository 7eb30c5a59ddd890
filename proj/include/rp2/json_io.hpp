#pragma once

#include <json.hpp>

#include "rp2/surface.hpp"

namespace rp2 {

using Json = nlohmann::ordered_json;

Json report_json(const SurfaceReport& r);

}  // namespace rp2
