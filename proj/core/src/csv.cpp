#include "cohex/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cohex::csv {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

Writer::Writer(const std::filesystem::path& path) : out_(path, std::ios::binary) {
    if (!out_) {
        throw std::runtime_error("csv: cannot open " + path.string() + " for writing");
    }
}

void Writer::header(const std::vector<std::string>& columns) { raw_row(columns); }

void Writer::row(const std::vector<double>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format_double(values[i]);
    }
    out_ << '\n';
}

void Writer::raw_row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

Table read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("csv: cannot open " + path.string() + " for reading");

    Table table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream cells(line);
        std::string cell;
        if (first) {
            while (std::getline(cells, cell, ',')) table.header.push_back(cell);
            first = false;
            continue;
        }
        std::vector<double> row;
        while (std::getline(cells, cell, ',')) {
            row.push_back(std::strtod(cell.c_str(), nullptr));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace cohex::csv
