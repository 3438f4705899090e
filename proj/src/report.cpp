#include "twopoint/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "twopoint/numeric.hpp"

namespace twopoint {

namespace {

std::string json_string(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + '"';
}

std::string short_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

struct Render {
    Format format;

    std::string operator()(double x) const
    {
        if (x == 0.0)
            x = 0.0;  // no "-0"
        if (format == Format::Json && !std::isfinite(x))
            return json_string(format_number(x));
        return format == Format::Text ? short_number(x) : format_number(x);
    }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(Undefined) const
    {
        return format == Format::Json ? json_string("undefined") : "undefined";
    }
    std::string operator()(const std::string& s) const
    {
        if (format == Format::Json)
            return json_string(s);
        return s.empty() ? "-" : s;
    }
};

}  // namespace

void Report::add(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("report row width differs from column count");
    rows.push_back(std::move(row));
}

void write_report(std::ostream& out, const Report& report, Format format)
{
    const Render render{format};
    if (format == Format::Json) {
        out << "{\"command\":" << json_string(report.command) << ",\"columns\":[";
        for (std::size_t i = 0; i < report.columns.size(); ++i)
            out << (i ? "," : "") << json_string(report.columns[i]);
        out << "],\"rows\":[";
        for (std::size_t r = 0; r < report.rows.size(); ++r) {
            out << (r ? "," : "") << '{';
            for (std::size_t i = 0; i < report.columns.size(); ++i)
                out << (i ? "," : "") << json_string(report.columns[i]) << ':'
                    << std::visit(render, report.rows[r][i]);
            out << '}';
        }
        out << "]}\n";
        return;
    }
    out << (format == Format::Columns ? "# " : "");
    for (std::size_t i = 0; i < report.columns.size(); ++i)
        out << (i ? " " : "") << report.columns[i];
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << std::visit(render, row[i]);
        out << '\n';
    }
}

}  // namespace twopoint
