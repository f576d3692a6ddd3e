#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hf::cli {

// Runs one CLI invocation. Returns the process exit code: 0 on success,
// 1 for usage/parse problems, 2 for domain errors. Output on `out` is
// byte-deterministic for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hf::cli
