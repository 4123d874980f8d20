// File and subprocess helpers shared by the unit and acceptance
// suites.

#ifndef FPA_TESTS_TESTUTIL_HPP
#define FPA_TESTS_TESTUTIL_HPP

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace testutil {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::filesystem::path unique_temp_path(const std::string& stem) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(++counter));
}

inline std::filesystem::path write_temp_file(const std::string& stem, const std::string& content) {
    const auto path = unique_temp_path(stem);
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs through the shell with stdout/stderr captured separately.
inline RunResult run_command(const std::string& command) {
    const auto out_path = unique_temp_path("fpa-stdout");
    const auto err_path = unique_temp_path("fpa-stderr");
    const std::string full =
        command + " > " + out_path.string() + " 2> " + err_path.string();
    const int raw = std::system(full.c_str());
    RunResult result;
    if (raw != -1 && WIFEXITED(raw))
        result.exit_code = WEXITSTATUS(raw);
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

inline std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// "174.64" -> 17464; rejects anything that is not <digits>.<2 digits>.
inline std::optional<std::int64_t> reparse_centi(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos || text.size() - dot != 3)
        return std::nullopt;
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (whole.empty() || whole.find_first_not_of("0123456789") != std::string::npos ||
        frac.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    return std::stoll(whole) * 100 + std::stoll(frac);
}

}  // namespace testutil

#endif  // FPA_TESTS_TESTUTIL_HPP
