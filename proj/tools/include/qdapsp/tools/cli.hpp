#ifndef QDAPSP_TOOLS_CLI_HPP
#define QDAPSP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qdapsp::tools {

/// Process exit codes of the qdapsp tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int config_error = 2;
inline constexpr int budget_exhausted = 3;
} // namespace exit_code

/// Entry point of the qdapsp tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qdapsp::tools

#endif
