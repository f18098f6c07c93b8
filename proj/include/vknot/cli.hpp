#pragma once

#include <iosfwd>

namespace vknot {

// Exit codes: 0 success, 1 usage error, 2 parse error, 3 verification mismatch.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace vknot
