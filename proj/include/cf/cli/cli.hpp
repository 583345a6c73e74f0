#pragma once

#include <iosfwd>

namespace cf::cli {

enum Exit : int { Ok = 0, VerificationFailed = 1, Usage = 2, Budget = 3 };

/* Entry point of cochainforge; writes reports to out and diagnostics to err. */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cf::cli
