#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace harrisar1 {

/// double -> shortest round-trippable decimal (17 significant digits).
std::string format_g17(double v);

/// RFC 4180 quoting: wraps the field in quotes when it contains a comma,
/// quote, or newline, doubling embedded quotes.
std::string csv_quote(std::string_view field);

/// FNV-1a 64-bit, used to stamp output files with a config fingerprint.
std::uint64_t fnv1a64(std::string_view data);

/// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace harrisar1
