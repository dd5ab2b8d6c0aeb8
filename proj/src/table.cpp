#include "hubmdl/table.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/core.h>
#include <json.hpp>

#include "hubmdl/errors.hpp"
#include "hubmdl/version.hpp"

namespace hubmdl {

std::size_t Table::column(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::out_of_range(fmt::format("no column '{}'", name));
    return static_cast<std::size_t>(it - columns.begin());
}

const Cell& Table::at(std::size_t row, std::string_view name) const {
    return rows.at(row).at(column(name));
}

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "structured" || name == "json") return OutputFormat::structured;
    throw ParameterError(fmt::format("unknown output format '{}' (expected csv|structured)", name));
}

std::string format_double(double x) { return fmt::format("{:.9g}", x); }

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
};

struct JsonCell {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
        if (!std::isfinite(v)) return format_double(v);
        return std::stod(format_double(v));
    }
    nlohmann::ordered_json operator()(bool v) const { return v; }
};

}  // namespace

void write_table(std::ostream& out, const Table& table, const RunHeader& header,
                 OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << "# " << kToolName << ' ' << kVersion << '\n';
        out << "# command: " << header.command_line << '\n';
        out << "# seed: " << (header.seed ? std::to_string(*header.seed) : std::string("none")) << '\n';
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? "," : "") << csv_escape(table.columns[c]);
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << std::visit(CsvCell{}, row[c]);
            }
            out << '\n';
        }
        return;
    }

    nlohmann::ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kVersion;
    doc["command"] = header.command_line;
    doc["seed"] = header.seed ? nlohmann::ordered_json(*header.seed) : nlohmann::ordered_json(nullptr);
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[table.columns[c]] = std::visit(JsonCell{}, row[c]);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

}  // namespace hubmdl
