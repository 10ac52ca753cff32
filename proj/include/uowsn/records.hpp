#ifndef UOWSN_RECORDS_HPP
#define UOWSN_RECORDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace uowsn::records {

/// A table cell. Reals are written with 9 significant digits in scientific
/// notation; integers in plain decimal so seeds and counts stay exact.
using Cell = std::variant<std::string, std::int64_t, std::uint64_t, double>;

std::string format_cell(const Cell& cell);

/// Inverse of format_cell: integer if the text is a plain decimal integer, real
/// if it parses completely as a floating-point number, otherwise text.
Cell parse_cell(const std::string& text);

class OutputRecordSet {
public:
    OutputRecordSet(std::string schema, std::vector<std::string> columns);

    const std::string& schema() const { return schema_; }
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    /// Throws std::invalid_argument when the row width differs from the schema.
    void add_row(std::vector<Cell> row);

    std::size_t column_index(const std::string& name) const;
    const Cell& at(std::size_t row, const std::string& column) const;
    double real(std::size_t row, const std::string& column) const;
    std::string text(std::size_t row, const std::string& column) const;

    /// Comma-separated, `\n` line endings, header row first.
    void write_csv(std::ostream& out) const;
    std::string to_csv() const;

    static OutputRecordSet parse_csv(std::istream& in, std::string schema);

private:
    std::string schema_;
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace uowsn::records

#endif  // UOWSN_RECORDS_HPP
