#include "hubmdl/graphio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include <fmt/core.h>

#include "hubmdl/errors.hpp"

namespace hubmdl {

namespace {

constexpr std::size_t kDetectLines = 100;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_content(std::string_view line, char comment) {
    const auto t = trim(line);
    return !t.empty() && t.front() != comment;
}

Delimiter detect(const std::vector<std::string>& lines, char comment) {
    std::size_t seen = 0, with_comma = 0, with_tab = 0;
    std::size_t first_comma = 0, first_plain = 0;
    for (std::size_t i = 0; i < lines.size() && seen < kDetectLines; ++i) {
        if (!is_content(lines[i], comment)) continue;
        const auto t = trim(lines[i]);
        ++seen;
        if (t.find(',') != std::string_view::npos) {
            if (with_comma++ == 0) first_comma = i + 1;
        } else if (first_plain == 0) {
            first_plain = i + 1;
        }
        if (t.find('\t') != std::string_view::npos) ++with_tab;
    }
    if (with_comma == 0) return with_tab == seen && seen > 0 ? Delimiter::tab : Delimiter::whitespace;
    if (with_comma == seen) return Delimiter::comma;
    throw ParseError(fmt::format("ambiguous delimiter: line {} uses commas but this line does not",
                                 first_comma),
                     first_plain);
}

std::vector<std::string_view> split(std::string_view line, Delimiter d) {
    std::vector<std::string_view> out;
    if (d == Delimiter::comma || d == Delimiter::tab) {
        const char sep = d == Delimiter::comma ? ',' : '\t';
        std::size_t start = 0;
        while (true) {
            const auto pos = line.find(sep, start);
            out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
            if (pos == std::string_view::npos) break;
            start = pos + 1;
        }
        return out;
    }
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Returns the weight as an integer multiplicity, or nullopt for a positive
// non-integer weight.
std::optional<std::uint64_t> parse_weight(std::string_view field, std::size_t line_no) {
    std::uint64_t as_int = 0;
    const auto* end = field.data() + field.size();
    if (auto [p, ec] = std::from_chars(field.data(), end, as_int); ec == std::errc() && p == end) {
        if (as_int == 0) throw ValueError(fmt::format("line {}: edge weight must be positive", line_no));
        return as_int;
    }
    double as_real = 0.0;
    try {
        std::size_t used = 0;
        as_real = std::stod(std::string(field), &used);
        if (used != field.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError(fmt::format("invalid weight '{}'", field), line_no);
    }
    if (!(as_real > 0.0) || !std::isfinite(as_real)) {
        throw ValueError(fmt::format("line {}: edge weight must be positive, got '{}'", line_no, field));
    }
    if (as_real == std::floor(as_real) && as_real < 1.8e19) return static_cast<std::uint64_t>(as_real);
    return std::nullopt;
}

}  // namespace

Delimiter parse_delimiter(std::string_view name) {
    if (name == "auto") return Delimiter::auto_detect;
    if (name == "whitespace" || name == "space") return Delimiter::whitespace;
    if (name == "comma") return Delimiter::comma;
    if (name == "tab") return Delimiter::tab;
    throw ParameterError(fmt::format("unknown delimiter '{}' (expected auto|whitespace|comma|tab)", name));
}

std::uint64_t DirectedGraph::total_multiplicity() const noexcept {
    std::uint64_t m = 0;
    for (const auto& e : edges) m += e.multiplicity;
    return m;
}

std::string DirectedGraph::label(std::size_t i) const {
    return i < labels.size() ? labels[i] : fmt::format("#{}", i);
}

DirectedGraph parse_edge_list(std::istream& in, const ParseOptions& opts) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));

    const Delimiter delim =
        opts.delimiter == Delimiter::auto_detect ? detect(lines, opts.comment_prefix) : opts.delimiter;

    DirectedGraph g;
    std::unordered_map<std::string, std::size_t> index;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_pos;

    auto node = [&](std::string_view label) {
        auto [it, inserted] = index.try_emplace(std::string(label), g.labels.size());
        if (inserted) g.labels.emplace_back(label);
        return it->second;
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        if (!is_content(lines[li], opts.comment_prefix)) continue;
        const auto fields = split(trim(lines[li]), delim);
        if (fields.size() < 2 || fields.size() > 3 ||
            std::any_of(fields.begin(), fields.end(), [](auto f) { return f.empty(); })) {
            throw ParseError(fmt::format("expected 'source target [weight]', got {} field(s)",
                                         fields.size()),
                             line_no);
        }

        std::uint64_t mult = 1;
        if (fields.size() == 3) {
            if (!opts.weighted && !opts.binarize) {
                throw ValueError(fmt::format(
                    "line {}: found a weight column; pass the weighted option to read it as edge "
                    "multiplicity or the binarize option to ignore weights",
                    line_no));
            }
            const auto w = parse_weight(fields[2], line_no);
            if (!w && !opts.binarize) {
                throw ValueError(fmt::format(
                    "line {}: non-integer weight '{}'; pass the binarize option to treat "
                    "weighted edges as unweighted",
                    line_no, fields[2]));
            }
            if (opts.weighted) mult = w.value_or(1);
        }

        const std::size_t s = node(fields[0]);
        const std::size_t t = node(fields[1]);
        if (s == t && (opts.binarize || !opts.allow_self_loops)) continue;
        if (opts.binarize) mult = 1;

        auto [it, inserted] = edge_pos.try_emplace({s, t}, g.edges.size());
        if (inserted) {
            g.edges.push_back({s, t, mult});
        } else if (!opts.binarize) {
            g.edges[it->second].multiplicity += mult;
        }
    }

    g.n_nodes = g.labels.size();
    if (opts.n_nodes) {
        if (*opts.n_nodes < g.n_nodes) {
            throw ValueError(fmt::format("declared node count {} is below the {} labels observed",
                                         *opts.n_nodes, g.n_nodes));
        }
        g.n_nodes = *opts.n_nodes;
    }
    if (g.edges.empty()) throw ValueError("edge list contains no edges");

    const bool multi = std::any_of(g.edges.begin(), g.edges.end(), [](const Edge& e) {
        return e.multiplicity > 1 || e.source == e.target;
    });
    g.family = multi ? GraphFamily::multigraph : GraphFamily::simple;
    return g;
}

DirectedGraph parse_edge_list_file(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ValueError(fmt::format("cannot open '{}'", path));
    return parse_edge_list(in, opts);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
    const bool weighted = std::any_of(g.edges.begin(), g.edges.end(),
                                      [](const Edge& e) { return e.multiplicity != 1; });
    for (const auto& e : g.edges) {
        out << g.label(e.source) << ' ' << g.label(e.target);
        if (weighted) out << ' ' << e.multiplicity;
        out << '\n';
    }
}

Direction parse_direction(std::string_view name) {
    if (name == "in") return Direction::in;
    if (name == "out") return Direction::out;
    throw ParameterError(fmt::format("unknown direction '{}' (expected in|out)", name));
}

std::string_view to_string(Direction d) noexcept { return d == Direction::in ? "in" : "out"; }

DegreeSequence degree_sequence(const DirectedGraph& g, Direction direction) {
    std::vector<Degree> k(g.n_nodes, 0);
    for (const auto& e : g.edges) {
        k[direction == Direction::in ? e.target : e.source] += e.multiplicity;
    }
    return DegreeSequence(std::move(k));
}

}  // namespace hubmdl
