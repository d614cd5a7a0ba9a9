#include "orlab/report.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "orlab/grid.hpp"

namespace orlab {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_.size())
        throw std::invalid_argument("Table: row width mismatch");
    rows_.push_back(cells);
}

void Table::add_row_numbers(const std::vector<double>& cells) {
    std::vector<std::string> r;
    r.reserve(cells.size());
    for (double v : cells) r.push_back(format_number(v));
    add_row(r);
}

std::string Table::render() const {
    std::ostringstream os;
    for (size_t i = 0; i < columns_.size(); ++i)
        os << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
    for (const auto& row : rows_)
        for (size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "\n");
    return os.str();
}

void Table::write(const std::string& path) const { write_text(path, render()); }

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_text: cannot open " + path);
    os << content;
}

std::string read_text(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_text: cannot open " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string grid_to_text(const GridFunction& g) {
    std::ostringstream os;
    const Eigen::ArrayXd xs = g.xs();
    for (int i = 0; i < g.size(); ++i)
        os << format_number(xs(i)) << "\t" << format_number(g.values()(i)) << "\n";
    return os.str();
}

}  // namespace orlab
