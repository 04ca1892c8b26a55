#pragma once

#include <iosfwd>

namespace mcdm {

// Exit codes: 0 success, 1 regression failure, 2 input error, 3 I/O error.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mcdm
