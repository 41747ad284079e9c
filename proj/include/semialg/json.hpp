#pragma once

#include <json.hpp>

namespace semialg {
using Json = nlohmann::ordered_json;
}
