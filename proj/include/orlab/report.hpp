#ifndef ORLAB_REPORT_HPP
#define ORLAB_REPORT_HPP

#include <string>
#include <vector>

namespace orlab {

/// Fixed 15-significant-digit numeric formatting used by every report so
/// identical runs emit identical bytes.
std::string format_number(double v);

/// Comma-delimited table with a header row.
class Table {
  public:
    explicit Table(std::vector<std::string> columns);

    void add_row(const std::vector<std::string>& cells);
    void add_row_numbers(const std::vector<double>& cells);
    std::string render() const;
    void write(const std::string& path) const;
    size_t rows() const { return rows_.size(); }

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

/// FNV-1a hash of a string, printed as 16 hex digits; used for the
/// config manifest embedded in every report.
std::string fnv1a_hex(const std::string& data);

void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

/// Serialize a grid function as two-column delimited text (x, value).
class GridFunction;
std::string grid_to_text(const GridFunction& g);

}  // namespace orlab

#endif
