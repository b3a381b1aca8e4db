#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace dmu {

/// Shortest round-trippable decimal with `precision` significant digits;
/// negative zero is normalized to "0" so output is byte-stable.
std::string format_value(double v, int precision);

/// Writes the whole file through a sibling temp file and an atomic rename,
/// so a crash or failure never leaves partial output behind. Throws IoError.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

/// Reads a whole file into memory. Throws IoError.
std::string read_text(const std::filesystem::path& path);

std::vector<std::string> split_line(const std::string& line, char sep);

}  // namespace dmu
