#pragma once

#include <string>
#include <vector>

namespace cleansched {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index by header name; -1 if absent.
    int column(const std::string& name) const;
};

// Reads a comma-separated UTF-8 file with one header row. Quoted fields
// ("a,b") are supported; embedded newlines are not.
CsvTable read_csv(const std::string& path);

CsvTable parse_csv(const std::string& text);

void write_csv(const std::string& path, const CsvTable& table);

// Shortest round-trip decimal representation (deterministic across runs).
std::string fmt_double(double v);

} // namespace cleansched
