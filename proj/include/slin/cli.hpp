#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slin {

//! Run the slinops command line. Returns the process exit code: 0 on success,
//! 1 when a numerical check fails, 2 on usage or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace slin
