#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hubmdl {

/// Empty cells (monostate) print as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, std::string, std::int64_t, double, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Index of a column; throws std::out_of_range when absent.
    std::size_t column(std::string_view name) const;
    const Cell& at(std::size_t row, std::string_view name) const;
};

enum class OutputFormat { csv, structured };

OutputFormat parse_format(std::string_view name);

/// Provenance written above every table.
struct RunHeader {
    std::string command_line;
    std::optional<std::uint64_t> seed;
};

/// Doubles are written with 9 significant digits.
std::string format_double(double x);

/// CSV: "# "-prefixed header lines (tool and version, command line, seed),
/// one column-name row, then the data rows. Structured: a single JSON object
/// with the same header fields and a "rows" array of objects.
void write_table(std::ostream& out, const Table& table, const RunHeader& header,
                 OutputFormat format);

}  // namespace hubmdl
