#pragma once

#include <iosfwd>

namespace hyperlink::cli {

/// Runs the full CLI. Returns 0 on success, 1 on runtime failure,
/// 2 on usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlink::cli
