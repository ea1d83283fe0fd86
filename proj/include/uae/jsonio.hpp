#pragma once
// Ordered JSON is used for every serialized report so that repeated runs are
// byte-identical; no timestamps, pointers, or unordered containers leak in.
#include <json.hpp>

namespace uae {

using OJson = nlohmann::ordered_json;

}  // namespace uae
