#pragma once

#include <string_view>
#include <vector>

#include "twodir/mask.hpp"

namespace twodir {

/// Names of the embedded mask files: "example-5.1" (scalar, d = 2, BAT O2-derived,
/// coefficients stored doubled so that M_0 = 1) and "example-5.2" (r = 2, d = 2).
std::vector<std::string_view> fixture_names();

/// Mask-file JSON for a builtin fixture. Accepts "example-5.1" or the short "5.1".
/// Throws InputError for unknown names.
std::string_view fixture_text(std::string_view name);

TwoDirectionSystem load_fixture(std::string_view name);

}  // namespace twodir
