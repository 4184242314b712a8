// SPDX-License-Identifier: Apache-2.0
#include "holobeam/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <system_error>

#include "holobeam/errors.hpp"

namespace holobeam {

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

namespace {

std::string strip(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

}  // namespace

IniData parse_ini(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());

    IniData data;
    std::string section;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::size_t comment = line.find_first_of(";#");
        if (comment != std::string::npos) line.erase(comment);
        line = strip(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(path.string() + ":" + std::to_string(line_number) +
                                  ": unterminated section header");
            section = strip(line.substr(1, line.size() - 2));
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(line_number) +
                              ": expected 'key = value'");
        const std::string key = strip(line.substr(0, eq));
        if (key.empty())
            throw ConfigError(path.string() + ":" + std::to_string(line_number) + ": empty key");
        data[section][key] = strip(line.substr(eq + 1));
    }
    return data;
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

}  // namespace holobeam
