#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kneser::tools {

// Exit codes: 0 success, 1 check or classification failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kneser::tools
