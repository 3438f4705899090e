#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace twopoint {

struct Undefined {
    friend bool operator==(Undefined, Undefined) { return true; }
};

using Cell = std::variant<double, std::int64_t, std::string, bool, Undefined>;

inline Cell cell(const std::optional<double>& v)
{
    return v ? Cell(*v) : Cell(Undefined{});
}

// One command's result: a named table.
struct Report {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

enum class Format { Text, Columns, Json };

// Json: {"command", "columns", "rows": [{column: value}]}; numbers "%.17g",
// undefined values as the string "undefined".
// Columns: '#'-prefixed header, whitespace-separated values, "%.17g".
// Text: same layout as Columns with "%.10g" and no '#'.
void write_report(std::ostream& out, const Report& report, Format format);

}  // namespace twopoint
