#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tenjoin {

// Command-line entry point. Returns 0 on success, 1 on a verification
// failure, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tenjoin
