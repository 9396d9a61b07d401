#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cartograph {

/// Full command-line surface (draw / compare / stats / estimate). args
/// excludes the program name. Returns the process exit status: 0 on
/// success, 1 with a single-line diagnostic on err for any failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cartograph
