#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace zsramsey {

/// Exit codes: 0 success, 1 typed domain error (or a failed verification),
/// 2 malformed flags or input files.
auto run_cli(std::span<const std::string> args, std::ostream & out, std::ostream & err) -> int;

}
