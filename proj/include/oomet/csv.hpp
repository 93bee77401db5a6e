#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace oomet {

// Minimal RFC-ish CSV: comma separated, double-quote quoting with ""
// escapes, tolerant of CRLF line endings.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, -1 when absent.
    int column(std::string_view name) const;
};

CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(std::string_view text, std::string_view origin);

// Quotes the field only when it needs it.
std::string csv_field(std::string_view value);

}  // namespace oomet
