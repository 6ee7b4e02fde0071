#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wbsearch {

/// Entry point of the `wbsearch` tool. Returns 0 on success, 2 on usage or
/// configuration errors, 1 on other failures.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wbsearch
