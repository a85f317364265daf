#include "zsramsey/text_io.hpp"

#include "zsramsey/error.hpp"

#include <charconv>
#include <sstream>

namespace zsramsey {

namespace
{
    auto split(const std::string & line) -> std::vector<std::string>
    {
        std::istringstream s(line);
        std::vector<std::string> words;
        std::string word;
        while (s >> word)
            words.push_back(word);
        return words;
    }
}

LineReader::LineReader(std::istream & in, std::string what) :
    _in(in), _what(std::move(what))
{
}

auto LineReader::fail(const std::string & message) const -> void
{
    throw Error(ErrorKind::ParseError, _what + " line " + std::to_string(_line_number) + ": " + message);
}

auto LineReader::next_line(std::string & line) -> bool
{
    if (! std::getline(_in, line))
        return false;
    ++_line_number;
    if (! line.empty() && line.back() == '\r')
        line.pop_back();
    return true;
}

auto LineReader::parse(std::span<const std::string> words) const -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> values;
    for (const auto & word : words) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc() || ptr != word.data() + word.size())
            fail("\"" + word + "\" is not a non-negative integer");
        values.push_back(value);
    }
    return values;
}

auto LineReader::expect_fields(std::size_t count, const std::string & description) -> std::vector<std::uint64_t>
{
    std::string line;
    if (! next_line(line)) {
        ++_line_number;
        fail("unexpected end of input, expected " + description);
    }
    auto words = split(line);
    if (words.size() != count)
        fail("expected " + description + ", got \"" + line + "\"");
    return parse(words);
}

auto LineReader::maybe_fields(std::size_t count, const std::string & description) -> std::optional<std::vector<std::uint64_t>>
{
    std::string line;
    while (next_line(line)) {
        auto words = split(line);
        if (words.empty())
            continue;
        if (words.size() != count)
            fail("expected " + description + ", got \"" + line + "\"");
        return parse(words);
    }
    return std::nullopt;
}

auto LineReader::expect_keyword(const std::string & keyword, std::size_t count) -> std::vector<std::uint64_t>
{
    std::string line;
    if (! next_line(line)) {
        ++_line_number;
        fail("unexpected end of input, expected \"" + keyword + "\"");
    }
    auto words = split(line);
    if (words.empty() || words.front() != keyword || words.size() != count + 1)
        fail("expected \"" + keyword + "\" line, got \"" + line + "\"");
    return parse(std::span(words).subspan(1));
}

auto LineReader::expect_end() -> void
{
    std::string line;
    while (next_line(line))
        if (! split(line).empty())
            fail("trailing content \"" + line + "\"");
}

}
