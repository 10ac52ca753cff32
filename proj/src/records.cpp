#include "uowsn/records.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "uowsn/format.hpp"

namespace uowsn::records {

std::string format_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_sci(v); }
    };
    return std::visit(Visitor{}, cell);
}

Cell parse_cell(const std::string& text) {
    if (text.empty()) return text;
    std::int64_t integer = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [iptr, iec] = std::from_chars(first, last, integer);
    if (iec == std::errc() && iptr == last) return integer;
    if (iec == std::errc::result_out_of_range && text.front() != '-') {
        std::uint64_t wide = 0;
        auto [uptr, uec] = std::from_chars(first, last, wide);
        if (uec == std::errc() && uptr == last) return wide;
    }
    // strtod rather than from_chars<double>: the latter is missing from older libstdc++.
    char* end = nullptr;
    const double real = std::strtod(text.c_str(), &end);
    if (end == last) return real;
    return text;
}

OutputRecordSet::OutputRecordSet(std::string schema, std::vector<std::string> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("record set needs at least one column");
}

void OutputRecordSet::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument(schema_ + ": row has " + std::to_string(row.size()) +
                                    " cells, schema has " + std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(row));
}

std::size_t OutputRecordSet::column_index(const std::string& name) const {
    auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) throw std::out_of_range(schema_ + ": no column " + name);
    return static_cast<std::size_t>(it - columns_.begin());
}

const Cell& OutputRecordSet::at(std::size_t row, const std::string& column) const {
    return rows_.at(row).at(column_index(column));
}

double OutputRecordSet::real(std::size_t row, const std::string& column) const {
    const Cell& c = at(row, column);
    if (const auto* d = std::get_if<double>(&c)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
    if (const auto* u = std::get_if<std::uint64_t>(&c)) return static_cast<double>(*u);
    throw std::invalid_argument(schema_ + ": column " + column + " is not numeric");
}

std::string OutputRecordSet::text(std::size_t row, const std::string& column) const {
    return format_cell(at(row, column));
}

void OutputRecordSet::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
        out << '\n';
    }
}

std::string OutputRecordSet::to_csv() const {
    std::ostringstream out;
    write_csv(out);
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

OutputRecordSet OutputRecordSet::parse_csv(std::istream& in, std::string schema) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument(schema + ": missing header row");
    OutputRecordSet set(std::move(schema), split(line));
    while (std::getline(in, line)) {
        std::vector<Cell> row;
        for (const auto& text : split(line)) row.push_back(parse_cell(text));
        set.add_row(std::move(row));
    }
    return set;
}

}  // namespace uowsn::records
