#include "primeap/report.hpp"

#include <cstdio>

namespace primeap {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string csv_cell(const ReportRow::Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

std::string json_cell(const ReportRow::Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "null"; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const {
            std::string out = "\"";
            for (char c : v) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            return out + "\"";
        }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

void ReportWriter::write(const ReportRow& row) {
    if (format_ == ReportFormat::Json) {
        os_ << '{';
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            if (i) os_ << ',';
            os_ << '"' << row.cells[i].first << "\":" << json_cell(row.cells[i].second);
        }
        os_ << "}\n";
        return;
    }
    std::vector<std::string> columns;
    columns.reserve(row.cells.size());
    for (const auto& [key, _] : row.cells) columns.push_back(key);
    if (columns != header_) {
        if (!header_.empty()) os_ << '\n';  // table break
        header_ = columns;
        for (std::size_t i = 0; i < columns.size(); ++i)
            os_ << (i ? "," : "") << columns[i];
        os_ << '\n';
    }
    for (std::size_t i = 0; i < row.cells.size(); ++i)
        os_ << (i ? "," : "") << csv_cell(row.cells[i].second);
    os_ << '\n';
}

}  // namespace primeap
