#pragma once

#include "wep4/laurent.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wep4 {

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i"). No whitespace.
/// Throws UsageError on anything else.
Complex parse_lambda(std::string_view text);

/// Runs one `wep4` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when verification fails, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wep4
