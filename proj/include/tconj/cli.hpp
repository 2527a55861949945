#pragma once

#include <string>
#include <vector>

namespace tconj {

// Entry point behind the tconj binary. args excludes the program name.
// Returns 0 on success, 1 on a verification or computation failure, 2 on a
// usage error. Reports go to stdout, diagnostics to stderr.
int cli_main(std::vector<std::string> args);
int cli_main(int argc, const char* const* argv);

}  // namespace tconj
