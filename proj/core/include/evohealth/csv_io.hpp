#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace evohealth {

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// Strict full-string parse; throws ConfigError naming `what` on failure.
double parse_double(std::string_view text, std::string_view what);

// FNV-1a, 64-bit.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

// A comma-separated table with '#'-prefixed metadata lines ahead of the header.
struct CsvTable {
    std::vector<std::string> metadata;  // comment lines with the leading "# " removed
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, or -1.
    int column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace evohealth
