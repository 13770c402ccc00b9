#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ammlab {

/// Runs one `ammlab` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on a usage error, 2 on an engine or probe error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ammlab
