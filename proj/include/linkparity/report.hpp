#pragma once

#include <string>

#include <json.hpp>

#include "linkparity/invariants.hpp"

namespace linkparity {

// Stable machine-readable form of a profile. Field order is fixed; fields
// that are undefined for the input are explicit nulls.
nlohmann::ordered_json profile_to_json(const WritheProfile& p);

// Multi-line human form.
std::string profile_to_text(const WritheProfile& p);

}  // namespace linkparity
