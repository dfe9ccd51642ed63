#include "fisherwit/error.hpp"
#include "fisherwit/sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fisherwit {

double SweepRow::at(const std::string& name) const {
    for (const auto& [key, value] : columns) {
        if (key == name) return value;
    }
    throw std::out_of_range("SweepRow: no column '" + name + "'");
}

Table to_table(const std::string& sweep_name, const std::vector<SweepRow>& rows) {
    Table t;
    t.headers.push_back(sweep_name);
    if (!rows.empty()) {
        for (const auto& [key, value] : rows.front().columns) t.headers.push_back(key);
    }
    for (const auto& r : rows) {
        if (r.columns.size() + 1 != t.headers.size()) throw Error("to_table: ragged sweep rows");
        std::vector<double> line{r.sweep_value};
        for (const auto& [key, value] : r.columns) line.push_back(value);
        t.rows.push_back(std::move(line));
    }
    return t;
}

std::string format_number(double v) {
    if (v == 0.0) return "0";  // folds -0
    char buf[64];
    // snprintf follows the C locale, which keeps '.' as the separator.
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string quoted(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.headers.size(); ++i) {
        if (i) out << ',';
        out << quoted(table.headers[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.headers.size()) throw Error("write_csv: row width differs from header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!std::isfinite(row[i])) {
                throw NumericalError("write_csv: non-finite value in column '" + table.headers[i] + "'");
            }
            if (i) out << ',';
            out << format_number(row[i]);
        }
        out << '\n';
    }
}

std::string to_csv(const Table& table) {
    std::ostringstream os;
    write_csv(os, table);
    return os.str();
}

}  // namespace fisherwit
