#ifndef GRPTOOL_CLI_HPP
#define GRPTOOL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace grptool {

// Runs one CLI invocation. `args` excludes the program name. Returns the
// process exit code: 0 = holds / found / consistent, 1 = fails / not found,
// 2 = usage or input error, 3 = resource cap exceeded.
int run_command(std::vector<std::string> args, std::ostream& out,
                std::ostream& err);

} // namespace grptool

#endif
