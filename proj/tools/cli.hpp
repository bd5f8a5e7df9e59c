#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lwg::cli {

// Exit codes: 0 success, 1 usage, 2 input/parse, 3 external service.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lwg::cli
