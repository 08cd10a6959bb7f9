#pragma once

#include <ostream>

namespace jordan {

// Exit codes: 0 success, 1 verification or computation failure, 2 usage or
// parse error.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jordan
