#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zsramsey {

/// Line-oriented reader for the whitespace-separated integer formats; every
/// failure is a ParseError naming the line.
class LineReader
{
public:
    LineReader(std::istream & in, std::string what);

    [[noreturn]] auto fail(const std::string & message) const -> void;

    /// Next line as exactly `count` non-negative integers.
    auto expect_fields(std::size_t count, const std::string & description) -> std::vector<std::uint64_t>;

    /// Next line as a word followed by integers ("sum_mod_p 0").
    auto expect_keyword(const std::string & keyword, std::size_t count) -> std::vector<std::uint64_t>;

    /// Like expect_fields, but nullopt once only blank lines remain.
    auto maybe_fields(std::size_t count, const std::string & description) -> std::optional<std::vector<std::uint64_t>>;

    /// Only blank lines may remain.
    auto expect_end() -> void;

    auto line_number() const noexcept -> std::size_t { return _line_number; }

private:
    auto next_line(std::string & line) -> bool;
    auto parse(std::span<const std::string> words) const -> std::vector<std::uint64_t>;

    std::istream & _in;
    std::string _what;
    std::size_t _line_number = 0;
};

}
