#pragma once

#include <spdlog/spdlog.h>

#include <string>
#include <vector>

namespace zsramsey {

/// Diagnostics go to stderr. Verbosity comes from ZSRAMSEY_LOG
/// (quiet | info | trace); unset means quiet.
auto logger() -> spdlog::logger &;

/// Phase transitions of one embedding run. Always recorded; echoed to the
/// logger at trace level.
class Trace
{
public:
    auto note(std::string event) -> void;
    auto events() const noexcept -> const std::vector<std::string> & { return _events; }
    auto contains(const std::string & prefix) const -> bool;

private:
    std::vector<std::string> _events;
};

}
