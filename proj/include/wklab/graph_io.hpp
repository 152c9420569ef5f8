#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wklab/graph.hpp"

namespace wklab {

enum class GraphFormat { graph6, dimacs, edge_list };

class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line, int column = -1)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        std::string s = "line " + std::to_string(line);
        if (column >= 0) s += ", col " + std::to_string(column);
        return s + ": " + msg;
    }

    int line_;
    int column_;
};

struct ParsedGraph {
    Graph graph;
    // Input-file vertex names per internal id ("1".."n" for DIMACS,
    // "0".."n-1" otherwise).
    std::vector<std::string> vertex_names;
};

ParsedGraph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// Convenience wrappers for the graph6 one-liner form.
Graph parse_graph6_line(std::string_view line);
std::string emit_graph6(const Graph& g);

std::optional<GraphFormat> format_from_name(std::string_view name);

// Heuristic used when no explicit format is given: DIMACS if a "p edge"
// header appears, edge list if the first line is a lone integer, graph6
// otherwise.
GraphFormat sniff_format(std::string_view text);

} // namespace wklab
