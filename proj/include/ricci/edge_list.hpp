#pragma once

#include "ricci/graph.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ricci {

// Edge-list text format:
//   # comment to end of line
//   n <count>        optional, first non-comment line only
//   <u> <v>          one undirected edge per line

enum class ParseErrorKind { self_loop, duplicate_edge, bad_token, vertex_out_of_range, malformed_line };

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

    [[nodiscard]] ParseErrorKind kind() const { return kind_; }
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

inline std::optional<Vertex> parse_id(std::string_view tok) {
    Vertex v = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return v;
}

} // namespace detail

inline Graph parse_edge_list(std::istream& in) {
    std::optional<std::size_t> declared_n;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    Vertex max_id = 0;
    bool any_content = false;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = detail::split_ws(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "n") {
            if (any_content) {
                throw ParseError(ParseErrorKind::malformed_line, lineno, "'n' header must be the first non-comment line");
            }
            if (tokens.size() != 2) throw ParseError(ParseErrorKind::malformed_line, lineno, "expected 'n <count>'");
            const auto count = detail::parse_id(tokens[1]);
            if (!count) throw ParseError(ParseErrorKind::bad_token, lineno, "non-integer token '" + std::string(tokens[1]) + "'");
            declared_n = *count;
            any_content = true;
            continue;
        }
        any_content = true;
        if (tokens.size() != 2) throw ParseError(ParseErrorKind::malformed_line, lineno, "expected '<u> <v>'");
        const auto u = detail::parse_id(tokens[0]);
        const auto v = detail::parse_id(tokens[1]);
        if (!u || !v) {
            const auto bad = !u ? tokens[0] : tokens[1];
            throw ParseError(ParseErrorKind::bad_token, lineno, "non-integer token '" + std::string(bad) + "'");
        }
        if (*u == *v) throw ParseError(ParseErrorKind::self_loop, lineno, "self-loop at vertex " + std::to_string(*u));
        if (declared_n && (*u >= *declared_n || *v >= *declared_n)) {
            throw ParseError(ParseErrorKind::vertex_out_of_range, lineno,
                             "vertex id " + std::to_string(std::max(*u, *v)) + " >= declared n = " +
                                 std::to_string(*declared_n));
        }
        const Edge e = Edge{*u, *v}.canonical();
        if (!seen.insert(e).second) {
            throw ParseError(ParseErrorKind::duplicate_edge, lineno,
                             "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
        edges.push_back(e);
        max_id = std::max({max_id, *u, *v});
    }
    const std::size_t n = declared_n ? *declared_n : (edges.empty() ? 0 : std::size_t{max_id} + 1);
    return Graph(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

/// Writes the "n" header followed by the edges in lexicographic order.
inline std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

} // namespace ricci
