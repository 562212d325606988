// Command-line driver. Exit codes: 0 success, 1 a verification failed,
// 2 usage or input error.
#pragma once

#include <iosfwd>

namespace delzant::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace delzant::cli
