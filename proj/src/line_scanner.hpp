// Shared line-level machinery for the .fpa sheet format and the
// override-file formats: comment stripping, trimming, key=value
// splitting, and strict integer parsing.

#ifndef FPA_LINE_SCANNER_HPP
#define FPA_LINE_SCANNER_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace fpa::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::string_view strip_comment(std::string_view s) {
    const auto pos = s.find('#');
    return pos == std::string_view::npos ? s : s.substr(0, pos);
}

struct ScannedLine {
    int number = 0;        // 1-based
    std::string_view text; // comment-stripped, trimmed, non-empty
};

// Blank and comment-only lines are dropped; numbering still counts them.
inline std::vector<ScannedLine> scan_lines(std::string_view text) {
    std::vector<ScannedLine> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++number;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view content = trim(strip_comment(text.substr(start, end - start)));
        if (!content.empty())
            lines.push_back({number, content});
        if (end == text.size())
            break;
        start = end + 1;
    }
    return lines;
}

// Full-match integer with optional sign; no whitespace, no partial
// parses.
inline std::optional<std::int64_t> parse_int(std::string_view token) {
    if (token.empty())
        return std::nullopt;
    if (token.front() == '+')
        token.remove_prefix(1);
    if (token.empty())
        return std::nullopt;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            tokens.push_back(s.substr(i, j - i));
        i = j;
    }
    return tokens;
}

// "[counts]" -> "counts"; anything not bracket-wrapped is not a header.
inline std::optional<std::string_view> section_name(std::string_view line) {
    if (line.size() >= 2 && line.front() == '[' && line.back() == ']')
        return trim(line.substr(1, line.size() - 2));
    return std::nullopt;
}

struct KeyValue {
    std::string_view key;
    std::string_view value;
};

inline std::optional<KeyValue> split_key_value(std::string_view line) {
    const auto pos = line.find('=');
    if (pos == std::string_view::npos)
        return std::nullopt;
    const std::string_view key = trim(line.substr(0, pos));
    const std::string_view value = trim(line.substr(pos + 1));
    if (key.empty())
        return std::nullopt;
    return KeyValue{key, value};
}

}  // namespace fpa::detail

#endif  // FPA_LINE_SCANNER_HPP
