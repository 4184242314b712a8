// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace holobeam {

/// Shortest decimal string that round-trips the double (C locale, '.'
/// separator). All file output goes through this so repeated runs are
/// byte-identical.
std::string format_double(double value);

/// Minimal INI reader: [section] headers, key = value lines, '#'/';'
/// comments. Returns section -> key -> raw value.
using IniData = std::map<std::string, std::map<std::string, std::string>>;
IniData parse_ini(const std::filesystem::path& path);

void ensure_directory(const std::filesystem::path& dir);

}  // namespace holobeam
