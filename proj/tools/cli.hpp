#pragma once

#include <ostream>

namespace parind::cli {

/// Runs one `parind` invocation. Exit codes: 0 success, 1 input error,
/// 2 a verification certificate failed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parind::cli
