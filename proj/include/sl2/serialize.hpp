#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sl2/kkr.hpp"
#include "sl2/led.hpp"

namespace sl2 {

/// {"lambda": [...], "rows": [[length, rigging], ...], "vacancy": {"len": p}}.
/// The configuration is canonicalized first, so both bijection routes
/// serialize to identical bytes.
nlohmann::json rc_to_json(const RiggedConfig& rc);
std::string rc_json_string(const RiggedConfig& rc);

/// {"bits": [[...]], "groups": [{"cells": [[l, c], ...], "mu": m, "j": j, "r": r}]}.
nlohmann::json led_to_json(const Path& path, const LocalEnergyTable& table,
                           const std::vector<SolitonGroup>& groups);
std::string led_json_string(const Path& path, const LocalEnergyTable& table,
                            const std::vector<SolitonGroup>& groups);

}  // namespace sl2
