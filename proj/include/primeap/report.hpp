#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace primeap {

// Flat key/value projection of a result row. Cell order is the column
// order; every run with identical inputs must serialize byte-identically.
struct ReportRow {
    using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double,
                              bool, std::string>;
    std::vector<std::pair<std::string, Cell>> cells;

    ReportRow& add(std::string key, Cell value) {
        cells.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

enum class ReportFormat { Csv, Json };

// 12 significant digits, locale-independent.
std::string format_double(double v);

class ReportWriter {
public:
    ReportWriter(std::ostream& os, ReportFormat format) : os_(os), format_(format) {}

    // CSV emits a header before the first row and again whenever the
    // column set changes (a new table); JSON is line-delimited objects.
    void write(const ReportRow& row);

private:
    std::ostream& os_;
    ReportFormat format_;
    std::vector<std::string> header_;
};

}  // namespace primeap
