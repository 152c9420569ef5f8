#include "wklab/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace wklab {

namespace {

constexpr int kG6Lo = 63;  // '?'
constexpr int kG6Hi = 126; // '~'

// Adjacency storage is quadratic in the order, so keep parsed graphs at
// desk scale.
constexpr long long kMaxParseOrder = 20000;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct G6Reader {
    std::string_view data;
    size_t pos = 0;

    int byte() {
        if (pos >= data.size()) throw parse_error("graph6 string truncated", 1, (int)pos);
        unsigned char c = data[pos];
        if (c < kG6Lo || c > kG6Hi)
            throw parse_error("graph6 byte out of range (expected '?'..'~')", 1, (int)pos);
        ++pos;
        return c - kG6Lo;
    }
};

long long g6_read_order(G6Reader& r) {
    int b = r.byte();
    if (b < 63) return b;
    // '~' escape: 3 or 6 more 6-bit groups
    if (r.pos < r.data.size() && r.data[r.pos] == '~') {
        r.byte();
        long long n = 0;
        for (int i = 0; i < 6; ++i) n = (n << 6) | r.byte();
        return n;
    }
    long long n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | r.byte();
    return n;
}

void g6_write_order(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Lo));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Lo));
    }
}

Graph parse_g6(std::string_view text) {
    std::string_view body = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (body.starts_with(header)) body.remove_prefix(header.size());
    G6Reader r{body};
    long long n = g6_read_order(r);
    if (n > kMaxParseOrder) throw parse_error("graph6 order too large", 1, 0);
    const long long expected = (n * (n - 1) / 2 + 5) / 6; // data bytes after the order
    if (static_cast<long long>(r.data.size() - r.pos) != expected)
        throw parse_error("graph6 length does not match the declared order", 1, (int)r.pos);
    GraphBuilder b(static_cast<int>(n));
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    int bits = 0, cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                cur = r.byte();
                bits = 6;
            }
            if (cur & (1 << (bits - 1))) b.add_edge(u, v);
            --bits;
        }
    }
    if (r.pos != r.data.size()) throw parse_error("trailing bytes after graph6 data", 1, (int)r.pos);
    return b.build();
}

std::string emit_g6(const Graph& g) {
    std::string out;
    const int n = g.vertex_count();
    g6_write_order(out, n);
    int bits = 0, cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(cur + kG6Lo));
                bits = 0;
                cur = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((cur << (6 - bits)) + kG6Lo));
    return out;
}

std::optional<long long> to_int(std::string_view tok) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

// Iterates lines with 1-based numbering, handling a missing final newline.
struct LineReader {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    std::optional<std::string_view> next() {
        if (pos >= text.size()) return std::nullopt;
        size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos) ? text.substr(pos)
                                                               : text.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    }
};

ParsedGraph parse_dimacs(std::string_view text) {
    LineReader lr{text};
    std::optional<GraphBuilder> b;
    long long declared_edges = 0, edge_lines = 0;
    while (auto line = lr.next()) {
        auto toks = split_ws(*line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (b) throw parse_error("duplicate problem line", lr.line_no);
            if (toks.size() != 4 || toks[1] != "edge")
                throw parse_error("malformed header (expected 'p edge <n> <m>')", lr.line_no);
            auto n = to_int(toks[2]), m = to_int(toks[3]);
            if (!n || !m || *n < 0 || *m < 0)
                throw parse_error("malformed header counts", lr.line_no);
            if (*n > kMaxParseOrder) throw parse_error("graph order too large", lr.line_no);
            b.emplace(static_cast<int>(*n));
            declared_edges = *m;
        } else if (toks[0] == "e") {
            if (!b) throw parse_error("edge before problem line", lr.line_no);
            if (toks.size() != 3) throw parse_error("malformed edge line", lr.line_no);
            auto u = to_int(toks[1]), v = to_int(toks[2]);
            if (!u || !v) throw parse_error("malformed edge endpoints", lr.line_no);
            if (*u < 1 || *u > b->vertex_count() || *v < 1 || *v > b->vertex_count())
                throw parse_error("vertex out of range (DIMACS ids are 1-based)", lr.line_no);
            if (*u == *v) throw parse_error("loop edge", lr.line_no);
            b->add_edge(static_cast<int>(*u) - 1, static_cast<int>(*v) - 1);
            ++edge_lines;
        } else {
            throw parse_error("unknown line type '" + std::string(toks[0]) + "'", lr.line_no);
        }
    }
    if (!b) throw parse_error("missing problem line", lr.line_no == 0 ? 1 : lr.line_no);
    if (edge_lines != declared_edges)
        throw parse_error("edge count mismatch: header declares " + std::to_string(declared_edges) +
                              ", found " + std::to_string(edge_lines),
                          lr.line_no);
    ParsedGraph r{b->build(), {}};
    r.vertex_names.reserve(r.graph.vertex_count());
    for (int v = 0; v < r.graph.vertex_count(); ++v) r.vertex_names.push_back(std::to_string(v + 1));
    return r;
}

std::string emit_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

Graph parse_edge_list(std::string_view text) {
    LineReader lr{text};
    std::optional<GraphBuilder> b;
    while (auto line = lr.next()) {
        auto toks = split_ws(*line);
        if (toks.empty()) continue;
        if (!b) {
            if (toks.size() != 1)
                throw parse_error("expected vertex count on the first line", lr.line_no);
            auto n = to_int(toks[0]);
            if (!n || *n < 0) throw parse_error("malformed vertex count", lr.line_no);
            if (*n > kMaxParseOrder) throw parse_error("graph order too large", lr.line_no);
            b.emplace(static_cast<int>(*n));
            continue;
        }
        if (toks.size() != 2) throw parse_error("expected 'u v' edge line", lr.line_no);
        auto u = to_int(toks[0]), v = to_int(toks[1]);
        if (!u || !v) throw parse_error("malformed edge endpoints", lr.line_no);
        if (*u < 0 || *u >= b->vertex_count() || *v < 0 || *v >= b->vertex_count())
            throw parse_error("vertex out of range (edge-list ids are 0-based)", lr.line_no);
        if (*u == *v) throw parse_error("loop edge", lr.line_no);
        b->add_edge(static_cast<int>(*u), static_cast<int>(*v));
    }
    if (!b) throw parse_error("empty input", 1);
    return b->build();
}

std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::vector<std::string> identity_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));
    return names;
}

} // namespace

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::graph6: {
        Graph g = parse_g6(text);
        auto names = identity_names(g.vertex_count());
        return {std::move(g), std::move(names)};
    }
    case GraphFormat::dimacs:
        return parse_dimacs(text);
    case GraphFormat::edge_list: {
        Graph g = parse_edge_list(text);
        auto names = identity_names(g.vertex_count());
        return {std::move(g), std::move(names)};
    }
    }
    throw std::logic_error("unreachable");
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    switch (format) {
    case GraphFormat::graph6: return emit_g6(g) + "\n";
    case GraphFormat::dimacs: return emit_dimacs(g);
    case GraphFormat::edge_list: return emit_edge_list(g);
    }
    throw std::logic_error("unreachable");
}

Graph parse_graph6_line(std::string_view line) { return parse_g6(line); }

std::string emit_graph6(const Graph& g) { return emit_g6(g); }

std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
    if (name == "edgelist" || name == "edge-list" || name == "el") return GraphFormat::edge_list;
    return std::nullopt;
}

GraphFormat sniff_format(std::string_view text) {
    std::string_view t = text;
    if (t.find(">>graph6<<") != std::string_view::npos) return GraphFormat::graph6;
    LineReader lr{t};
    while (auto line = lr.next()) {
        auto toks = split_ws(*line);
        if (toks.empty()) continue;
        if (toks[0] == "p" || toks[0] == "c" || toks[0] == "e") return GraphFormat::dimacs;
        if (toks.size() == 1 && to_int(toks[0])) return GraphFormat::edge_list;
        return GraphFormat::graph6;
    }
    return GraphFormat::graph6;
}

} // namespace wklab
