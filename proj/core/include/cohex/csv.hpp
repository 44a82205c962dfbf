#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace cohex::csv {

/// Shortest text that still round-trips a double exactly: 17 significant
/// digits, '.' decimal separator, locale-independent.
std::string format_double(double value);

/// Line-oriented CSV writer with LF endings and the fixed float format
/// above; identical inputs produce byte-identical files.
class Writer {
public:
    explicit Writer(const std::filesystem::path& path);

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& cells);

private:
    std::ofstream out_;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Reads a numeric CSV written by Writer. Non-numeric cells ("nan", "inf")
/// parse through strtod as usual.
Table read(const std::filesystem::path& path);

} // namespace cohex::csv
