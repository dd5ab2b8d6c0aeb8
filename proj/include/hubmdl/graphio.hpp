#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hubmdl/codelength.hpp"

namespace hubmdl {

enum class Delimiter { auto_detect, whitespace, comma, tab };

Delimiter parse_delimiter(std::string_view name);

struct ParseOptions {
    Delimiter delimiter = Delimiter::auto_detect;
    /// Read the optional third column as an integer multiplicity. A third
    /// column is an error unless weighted or binarize is set.
    bool weighted = false;
    /// Collapse to a simple graph: weights become 1, duplicates merge, self-loops go.
    bool binarize = false;
    bool allow_self_loops = true;
    char comment_prefix = '#';
    /// Declared node count; must be at least the number of distinct labels.
    /// Extra nodes are isolated and carry no label.
    std::optional<std::size_t> n_nodes;
};

struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    std::uint64_t multiplicity = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed graph with integer edge multiplicities. Edges are unique per
/// (source, target) pair and kept in first-appearance order.
struct DirectedGraph {
    std::size_t n_nodes = 0;
    std::vector<Edge> edges;
    GraphFamily family = GraphFamily::simple;
    std::vector<std::string> labels;  ///< labels[i] is the label of node i (observed nodes only)

    std::uint64_t total_multiplicity() const noexcept;
    /// Label of node i, or "#i" for isolated nodes added through n_nodes.
    std::string label(std::size_t i) const;

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;
};

/// Parses "source <delim> target [<delim> weight]" lines. Blank lines and
/// lines starting with the comment prefix are skipped. Labels map to dense
/// indices in order of first appearance.
DirectedGraph parse_edge_list(std::istream& in, const ParseOptions& opts = {});
DirectedGraph parse_edge_list_file(const std::string& path, const ParseOptions& opts = {});

/// Writes the graph back as an edge list: two columns when every multiplicity
/// is 1, three otherwise. Re-parsing with weighted = true reproduces it.
void write_edge_list(std::ostream& out, const DirectedGraph& g);

enum class Direction { in, out };

Direction parse_direction(std::string_view name);
std::string_view to_string(Direction d) noexcept;

/// In- or out-degree (strength) of every node, summing multiplicities.
DegreeSequence degree_sequence(const DirectedGraph& g, Direction direction);

}  // namespace hubmdl
