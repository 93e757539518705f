#pragma once

#include <string>
#include <vector>

namespace tonelli {

// Batch front end; returns the process exit status (0 pass, 1 verdict
// failure, 2 usage error) and writes the report to out/err.
int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace tonelli
