#include "zsramsey/log.hpp"

#include <spdlog/sinks/stdout_sinks.h>

#include <cstdlib>
#include <string_view>

namespace zsramsey {

auto logger() -> spdlog::logger &
{
    static auto instance = [] {
        auto l = std::make_shared<spdlog::logger>("zsramsey", std::make_shared<spdlog::sinks::stderr_sink_mt>());
        l->set_pattern("[%l] %v");
        std::string_view level = std::getenv("ZSRAMSEY_LOG") ? std::getenv("ZSRAMSEY_LOG") : "quiet";
        if (level == "trace")
            l->set_level(spdlog::level::trace);
        else if (level == "info")
            l->set_level(spdlog::level::info);
        else
            l->set_level(spdlog::level::err);
        return l;
    }();
    return *instance;
}

auto Trace::note(std::string event) -> void
{
    logger().trace("{}", event);
    _events.push_back(std::move(event));
}

auto Trace::contains(const std::string & prefix) const -> bool
{
    for (const auto & e : _events)
        if (e.rfind(prefix, 0) == 0)
            return true;
    return false;
}

}
