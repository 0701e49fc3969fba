#ifndef COGNATE_CSV_HPP
#define COGNATE_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace cognate {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Parse delimited text. Quoted fields may contain the separator, doubled
/// quotes and line breaks. A UTF-8 BOM and CR line endings are tolerated.
CsvTable parse_csv(std::string_view text, char separator = ',');

/// Read and parse a file. Throws on a missing or empty file.
CsvTable read_csv(const std::string& path, char separator = ',');

/// Quote a field when it contains the separator, a quote or a line break.
std::string csv_escape(std::string_view field, char separator = ',');

} // namespace cognate

#endif
