#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ammlab/engine.hpp"

namespace ammlab {

/// Parses `key = value` lines. Keys: archetype, curve, tokens, reserves, fee, and the
/// curve parameters weights, chi, t, b, k, target_reserves, kappa, c. Blank lines and
/// lines starting with '#' are skipped. Unknown or misplaced keys are Parse errors.
PoolConfig parse_pool_config(std::string_view text, std::string name = "pool");

/// Names of the configurations compiled into the library.
const std::vector<std::string>& builtin_pool_names();
bool is_builtin_pool(std::string_view name);
PoolConfig builtin_pool_config(std::string_view name);
std::string_view builtin_pool_text(std::string_view name);

/// Built-in name or path to a pool file.
PoolConfig load_pool_config(const std::string& name_or_path);

}  // namespace ammlab
