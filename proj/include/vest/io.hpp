#pragma once

#include "vest/error.hpp"
#include "vest/graph.hpp"
#include "vest/instance.hpp"
#include "vest/layout.hpp"
#include "vest/linalg.hpp"

#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vest {

namespace detail {

struct Line {
    std::size_t number;
    std::string_view text;
};

// Splits on LF, dropping a trailing CR from each line. A final newline does
// not produce an extra empty line.
inline std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        auto const nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back({number++, line});
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    return lines;
}

inline std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
            ++pos;
        }
        std::size_t const start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
            ++pos;
        }
        if (pos > start) {
            out.push_back(line.substr(start, pos - start));
        }
    }
    return out;
}

inline std::optional<std::size_t> parse_count(std::string_view token)
{
    std::size_t value = 0;
    auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

inline std::size_t require_count(std::string_view token, Line const& line)
{
    auto value = parse_count(token);
    if (!value) {
        throw ParseError(ParseErrorKind::malformed, line.number, "expected a non-negative integer, got '"
                                                                     + std::string(token) + "'");
    }
    return *value;
}

// Adds {u, v} (0-based) with the simple-graph checks reported as parse errors.
inline void add_checked_edge(Graph& graph, std::size_t u, std::size_t v, Line const& line)
{
    if (u >= graph.n() || v >= graph.n()) {
        throw ParseError(ParseErrorKind::endpoint_out_of_range, line.number, std::string(line.text));
    }
    if (u == v) {
        throw ParseError(ParseErrorKind::self_loop, line.number, std::string(line.text));
    }
    if (graph.has_edge(u, v)) {
        throw ParseError(ParseErrorKind::duplicate_edge, line.number, std::string(line.text));
    }
    graph.add_edge(u, v);
}

} // namespace detail

/// DIMACS edge format: "c" comments, one "p edge <n> <e>" header, "e <u> <v>" with 1-based endpoints.
inline Graph parse_dimacs(std::string_view text)
{
    std::optional<Graph> graph;
    std::size_t declared_edges = 0;
    std::size_t header_line = 0;
    auto const lines = detail::split_lines(text);
    for (auto const& line : lines) {
        auto const tok = detail::tokens(line.text);
        if (tok.empty() || tok[0] == "c") {
            continue;
        }
        if (tok[0] == "p") {
            if (graph) {
                throw ParseError(ParseErrorKind::duplicate_header, line.number, "first header on line "
                                                                                    + std::to_string(header_line));
            }
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
                throw ParseError(ParseErrorKind::malformed, line.number, "expected 'p edge <n> <e>'");
            }
            graph.emplace(detail::require_count(tok[2], line));
            declared_edges = detail::require_count(tok[3], line);
            header_line = line.number;
        } else if (tok[0] == "e") {
            if (!graph) {
                throw ParseError(ParseErrorKind::missing_header, line.number, "edge before 'p' line");
            }
            if (tok.size() != 3) {
                throw ParseError(ParseErrorKind::malformed, line.number, "expected 'e <u> <v>'");
            }
            std::size_t const u = detail::require_count(tok[1], line);
            std::size_t const v = detail::require_count(tok[2], line);
            if (u == 0 || v == 0) {
                throw ParseError(ParseErrorKind::endpoint_out_of_range, line.number, "DIMACS vertices are 1-based");
            }
            detail::add_checked_edge(*graph, u - 1, v - 1, line);
        } else {
            throw ParseError(ParseErrorKind::malformed, line.number, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!graph) {
        throw ParseError(ParseErrorKind::missing_header, lines.size() + 1, "no 'p edge' line");
    }
    if (graph->edge_count() != declared_edges) {
        throw ParseError(ParseErrorKind::edge_count_mismatch, header_line,
                         "header declares " + std::to_string(declared_edges) + " edges, found "
                             + std::to_string(graph->edge_count()));
    }
    return std::move(*graph);
}

/// Edge list: first non-comment line is n, then "u v" per line (0-based). '#' starts a comment.
inline Graph parse_edgelist(std::string_view text)
{
    std::optional<Graph> graph;
    auto const lines = detail::split_lines(text);
    for (auto const& line : lines) {
        auto const tok = detail::tokens(line.text.substr(0, line.text.find('#')));
        if (tok.empty()) {
            continue;
        }
        if (!graph) {
            if (tok.size() != 1) {
                throw ParseError(ParseErrorKind::missing_header, line.number, "expected vertex count");
            }
            graph.emplace(detail::require_count(tok[0], line));
            continue;
        }
        if (tok.size() != 2) {
            throw ParseError(ParseErrorKind::malformed, line.number, "expected '<u> <v>'");
        }
        detail::add_checked_edge(*graph, detail::require_count(tok[0], line), detail::require_count(tok[1], line),
                                 line);
    }
    if (!graph) {
        throw ParseError(ParseErrorKind::missing_header, lines.size() + 1, "no vertex count line");
    }
    return std::move(*graph);
}

namespace detail {

inline void write_block(std::string& out, SparseRationalMatrix const& matrix)
{
    for (auto const& e : matrix.entries()) {
        out += std::to_string(e.row);
        out += ' ';
        out += std::to_string(e.col);
        out += ' ';
        out += e.value.to_string();
        out += '\n';
    }
    out += "END\n";
}

} // namespace detail

/// "VEST 1" document. Output depends only on the instance value.
inline std::string serialize_instance(VestInstance const& instance)
{
    std::string out = "VEST 1\n";
    out += "d " + std::to_string(instance.d()) + "\n";
    out += "m " + std::to_string(instance.m()) + "\n";
    out += "h " + std::to_string(instance.h()) + "\n";
    out += "v\n";
    for (std::size_t i = 0; i < instance.d(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += instance.start()[i].to_string();
    }
    out += '\n';
    for (std::size_t t = 0; t < instance.m(); ++t) {
        out += "T " + std::to_string(t) + "\n";
        detail::write_block(out, instance.transform(t));
    }
    out += "S\n";
    detail::write_block(out, instance.selector());
    return out;
}

namespace detail {

class InstanceReader {
public:
    explicit InstanceReader(std::string_view text) : lines_(split_lines(text)) {}

    VestInstance read()
    {
        auto const& header = next("VEST header");
        auto const tok = tokens(header.text);
        if (tok.size() != 2 || tok[0] != "VEST") {
            throw ParseError(ParseErrorKind::missing_header, header.number, "expected 'VEST 1'");
        }
        if (tok[1] != "1") {
            throw ParseError(ParseErrorKind::unsupported_version, header.number, "version " + std::string(tok[1]));
        }
        std::size_t const d = keyed_dimension("d");
        std::size_t const m = keyed_dimension("m");
        std::size_t const h = keyed_dimension("h");

        expect_keyword("v");
        auto const& values = next("start vector");
        auto const entries = tokens(values.text);
        if (entries.size() != d) {
            throw ParseError(ParseErrorKind::malformed, values.number,
                             "expected " + std::to_string(d) + " entries, got " + std::to_string(entries.size()));
        }
        RationalVector start(d);
        for (std::size_t i = 0; i < d; ++i) {
            start[i] = rational(entries[i], values);
        }

        std::vector<SparseRationalMatrix> transforms;
        transforms.reserve(m);
        for (std::size_t t = 0; t < m; ++t) {
            auto const& line = next("transform block");
            auto const head = tokens(line.text);
            if (head.size() != 2 || head[0] != "T" || parse_count(head[1]) != t) {
                throw ParseError(ParseErrorKind::malformed, line.number, "expected 'T " + std::to_string(t) + "'");
            }
            transforms.push_back(block(d, d));
        }
        expect_keyword("S");
        SparseRationalMatrix selector = block(h, d);

        if (pos_ < lines_.size()) {
            throw ParseError(ParseErrorKind::malformed, lines_[pos_].number, "trailing content");
        }
        return VestInstance(std::move(start), std::move(transforms), std::move(selector));
    }

private:
    Line const& next(char const* what)
    {
        if (pos_ >= lines_.size()) {
            throw ParseError(ParseErrorKind::malformed, lines_.size() + 1,
                             std::string("unexpected end of document, expected ") + what);
        }
        return lines_[pos_++];
    }

    void expect_keyword(std::string_view keyword)
    {
        auto const& line = next("keyword");
        if (line.text != keyword) {
            throw ParseError(ParseErrorKind::malformed, line.number, "expected '" + std::string(keyword) + "'");
        }
    }

    std::size_t keyed_dimension(std::string_view key)
    {
        auto const& line = next("dimension");
        auto const tok = tokens(line.text);
        if (tok.size() != 2 || tok[0] != key) {
            throw ParseError(ParseErrorKind::malformed, line.number, "expected '" + std::string(key) + " <n>'");
        }
        std::size_t const value = require_count(tok[1], line);
        if (value == 0) {
            throw ParseError(ParseErrorKind::malformed, line.number, std::string(key) + " must be positive");
        }
        return value;
    }

    static Rational rational(std::string_view token, Line const& line)
    {
        auto value = Rational::from_string(token);
        if (!value) {
            throw ParseError(ParseErrorKind::bad_rational, line.number, "'" + std::string(token) + "'");
        }
        return std::move(*value);
    }

    SparseRationalMatrix block(std::size_t rows, std::size_t cols)
    {
        std::vector<MatrixEntry> entries;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (;;) {
            auto const& line = next("END");
            if (line.text == "END") {
                break;
            }
            auto const tok = tokens(line.text);
            if (tok.size() != 3) {
                throw ParseError(ParseErrorKind::malformed, line.number, "expected '<row> <col> <value>'");
            }
            std::size_t const r = require_count(tok[0], line);
            std::size_t const c = require_count(tok[1], line);
            if (r >= rows || c >= cols) {
                throw ParseError(ParseErrorKind::entry_out_of_range, line.number,
                                 "(" + std::to_string(r) + ", " + std::to_string(c) + ") outside "
                                     + std::to_string(rows) + "x" + std::to_string(cols));
            }
            if (!seen.emplace(r, c).second) {
                throw ParseError(ParseErrorKind::duplicate_entry, line.number,
                                 "(" + std::to_string(r) + ", " + std::to_string(c) + ")");
            }
            entries.push_back({r, c, rational(tok[2], line)});
        }
        return SparseRationalMatrix::from_entries(rows, cols, std::move(entries));
    }

    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline VestInstance parse_instance(std::string_view text) { return detail::InstanceReader(text).read(); }

/// Sidecar describing which reduction produced an instance:
/// "VEST-LAYOUT 1", "n <n>", "k <k>", then one "e <u> <v>" (0-based) per edge.
inline std::string serialize_layout(ReductionLayout const& layout)
{
    std::string out = "VEST-LAYOUT 1\n";
    out += "n " + std::to_string(layout.n()) + "\n";
    out += "k " + std::to_string(layout.k()) + "\n";
    for (auto const& [u, v] : layout.edges()) {
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

inline ReductionLayout parse_layout(std::string_view text)
{
    auto const lines = detail::split_lines(text);
    auto expect = [&](std::size_t i, std::string_view key) -> std::size_t {
        if (i >= lines.size()) {
            throw ParseError(ParseErrorKind::malformed, i + 1, "unexpected end of layout");
        }
        auto const tok = detail::tokens(lines[i].text);
        if (tok.size() != 2 || tok[0] != key) {
            throw ParseError(ParseErrorKind::malformed, lines[i].number, "expected '" + std::string(key) + " <n>'");
        }
        return detail::require_count(tok[1], lines[i]);
    };
    if (lines.empty() || lines[0].text != "VEST-LAYOUT 1") {
        throw ParseError(ParseErrorKind::missing_header, 1, "expected 'VEST-LAYOUT 1'");
    }
    Graph graph(expect(1, "n"));
    std::size_t const k = expect(2, "k");
    for (std::size_t i = 3; i < lines.size(); ++i) {
        auto const tok = detail::tokens(lines[i].text);
        if (tok.size() != 3 || tok[0] != "e") {
            throw ParseError(ParseErrorKind::malformed, lines[i].number, "expected 'e <u> <v>'");
        }
        detail::add_checked_edge(graph, detail::require_count(tok[1], lines[i]),
                                 detail::require_count(tok[2], lines[i]), lines[i]);
    }
    try {
        return ReductionLayout(graph, k);
    } catch (InvalidArgument const& e) {
        throw ParseError(ParseErrorKind::malformed, 1, e.what());
    }
}

} // namespace vest
