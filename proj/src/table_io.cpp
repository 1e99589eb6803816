#include "gyro/table_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

namespace gyro {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

struct Line {
    int no;  // 1-based
    std::string raw;  // comment-stripped
    std::vector<Token> tokens;
};

// Comment-stripped, tokenized, blank lines dropped.
std::vector<Line> scan_lines(std::string_view text) {
    std::vector<Line> lines;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);

        Line line{line_no, std::string(raw), {}};
        size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            const size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            line.tokens.push_back({std::string(raw.substr(start, i - start)),
                                   static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
    }
    return lines;
}

int parse_int(const Token& tok, int line_no) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw ParseError("expected an integer, got '" + tok.text + "'", line_no, tok.col);
    return value;
}

}  // namespace

Permutation parse_cycles(std::string_view text, int n) {
    if (n <= 0) throw GyroError("cycle parse needs a positive degree");
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;

    size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && (text[i] == 'I' || text[i] == 'i')) {
        ++i;
        skip_ws();
        if (i != text.size()) throw GyroError("trailing input after identity permutation");
        return Permutation(std::move(images));
    }

    std::vector<char> used(n, 0);
    bool any_cycle = false;
    while (i < text.size()) {
        if (text[i] != '(')
            throw GyroError(std::string("expected '(' in cycle notation, got '") + text[i] + "'");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            while (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
            if (i >= text.size()) throw GyroError("unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i)
                throw GyroError(std::string("expected a point in cycle, got '") + text[i] + "'");
            int point = 0;
            std::from_chars(text.data() + start, text.data() + i, point);
            if (point >= n)
                throw GyroError("cycle point " + std::to_string(point) + " out of range [0," +
                                std::to_string(n) + ")");
            if (used[point])
                throw GyroError("cycle point " + std::to_string(point) + " repeated");
            used[point] = 1;
            cycle.push_back(point);
        }
        any_cycle = true;
        for (size_t k = 0; k < cycle.size(); ++k)
            images[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    if (!any_cycle) throw GyroError("empty cycle notation (use 'I' or '()' for the identity)");
    return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
    const int n = p.degree();
    std::vector<char> seen(n, 0);
    std::string out;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || p(start) == start) continue;
        out += '(';
        int x = start;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(x);
            seen[x] = 1;
            x = p(x);
            first = false;
        } while (x != start);
        out += ')';
    }
    return out.empty() ? "I" : out;
}

namespace {

// spreadsheet-style names for nonidentity pool entries: A..Z, AA, AB, ...
std::string pool_name(int id) {
    if (id == 0) return "I";
    int k = id - 1;
    std::string name;
    do {
        name.insert(name.begin(), static_cast<char>('A' + k % 26));
        k = k / 26 - 1;
    } while (k >= 0);
    return name;
}

}  // namespace

ParsedTables parse_table_file(std::string_view text) {
    const auto lines = scan_lines(text);
    size_t cursor = 0;
    const auto next_line = [&]() -> const Line& {
        if (cursor >= lines.size()) {
            const int last = lines.empty() ? 1 : lines.back().no;
            throw ParseError("unexpected end of input", last, 1);
        }
        return lines[cursor++];
    };

    // header
    const Line& header = next_line();
    if (header.tokens[0].text != "gyrogroup")
        throw ParseError("expected header 'gyrogroup <order>'", header.no, header.tokens[0].col);
    if (header.tokens.size() != 2)
        throw ParseError("header needs exactly one order argument", header.no,
                         header.tokens[0].col);
    const int n = parse_int(header.tokens[1], header.no);
    if (n <= 0) throw ParseError("order must be positive", header.no, header.tokens[1].col);

    // addition section
    const Line& add_marker = next_line();
    if (add_marker.tokens.size() != 1 || add_marker.tokens[0].text != "addition")
        throw ParseError("expected section marker 'addition'", add_marker.no,
                         add_marker.tokens[0].col);

    std::vector<std::vector<int>> rows;
    rows.reserve(n);
    for (int r = 0; r < n; ++r) {
        const Line& line = next_line();
        if (static_cast<int>(line.tokens.size()) != n)
            throw ParseError("addition row " + std::to_string(r) + " has " +
                                 std::to_string(line.tokens.size()) + " entries, expected " +
                                 std::to_string(n),
                             line.no, line.tokens[0].col);
        std::vector<int> row;
        row.reserve(n);
        for (const Token& tok : line.tokens) {
            const int v = parse_int(tok, line.no);
            if (v < 0 || v >= n)
                throw ParseError("entry " + std::to_string(v) + " out of range [0," +
                                     std::to_string(n) + ")",
                                 line.no, tok.col);
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    CayleyTable addition(rows);

    if (cursor >= lines.size()) return {std::move(addition), std::nullopt};

    // gyration section
    const Line& gyr_marker = next_line();
    if (gyr_marker.tokens[0].text != "gyration")
        throw ParseError("expected 'gyration names', 'gyration cycles' or end of file",
                         gyr_marker.no, gyr_marker.tokens[0].col);
    if (gyr_marker.tokens.size() != 2 ||
        (gyr_marker.tokens[1].text != "names" && gyr_marker.tokens[1].text != "cycles"))
        throw ParseError("gyration section style must be 'names' or 'cycles'", gyr_marker.no,
                         gyr_marker.tokens[0].col);
    const bool names_style = gyr_marker.tokens[1].text == "names";

    GyrationTableBuilder builder(n);

    if (names_style) {
        struct Cell {
            std::string name;
            int line, col;
        };
        std::vector<Cell> cells;
        cells.reserve(static_cast<size_t>(n) * n);
        for (int r = 0; r < n; ++r) {
            const Line& line = next_line();
            if (static_cast<int>(line.tokens.size()) != n)
                throw ParseError("gyration row " + std::to_string(r) + " has " +
                                     std::to_string(line.tokens.size()) + " entries, expected " +
                                     std::to_string(n),
                                 line.no, line.tokens[0].col);
            for (const Token& tok : line.tokens) cells.push_back({tok.text, line.no, tok.col});
        }

        std::map<std::string, Permutation> legend;
        legend.emplace("I", Permutation::identity(n));
        while (cursor < lines.size()) {
            const Line& line = next_line();
            if (line.tokens[0].text != "perm")
                throw ParseError("expected legend line 'perm <name> = <cycles>'", line.no,
                                 line.tokens[0].col);
            if (line.tokens.size() < 3 || line.tokens[2].text != "=")
                throw ParseError("malformed legend line; expected 'perm <name> = <cycles>'",
                                 line.no, line.tokens[0].col);
            const std::string& name = line.tokens[1].text;
            if (legend.count(name))
                throw ParseError("permutation '" + name + "' defined twice", line.no,
                                 line.tokens[1].col);
            const std::string cycles = line.raw.substr(line.tokens[2].col);  // after '='
            try {
                legend.emplace(name, parse_cycles(cycles, n));
            } catch (const GyroError& e) {
                throw ParseError(e.what(), line.no, line.tokens[2].col + 1);
            }
        }

        for (const Cell& cell : cells) {
            auto it = legend.find(cell.name);
            if (it == legend.end())
                throw ParseError("unknown permutation name '" + cell.name + "'", cell.line,
                                 cell.col);
            builder.push(it->second);
        }
    } else {
        for (int r = 0; r < n; ++r) {
            const Line& line = next_line();
            if (static_cast<int>(line.tokens.size()) != n)
                throw ParseError("gyration row " + std::to_string(r) + " has " +
                                     std::to_string(line.tokens.size()) + " entries, expected " +
                                     std::to_string(n),
                                 line.no, line.tokens[0].col);
            for (const Token& tok : line.tokens) {
                try {
                    builder.push(tok.text == "()" ? Permutation::identity(n)
                                                  : parse_cycles(tok.text, n));
                } catch (const GyroError& e) {
                    throw ParseError(e.what(), line.no, tok.col);
                }
            }
        }
        if (cursor < lines.size())
            throw ParseError("unexpected content after gyration section", lines[cursor].no,
                             lines[cursor].tokens[0].col);
    }

    return {std::move(addition), builder.finish()};
}

std::string serialize_table_file(const Gyrogroup& g) {
    const int n = g.order();
    std::ostringstream out;
    out << "gyrogroup " << n << "\n";
    out << "addition\n";
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b) out << ' ';
            out << g.op(a, b);
        }
        out << "\n";
    }
    const auto& gyr = g.gyrations();
    out << "gyration names\n";
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b) out << ' ';
            out << pool_name(gyr.perm_id(a, b));
        }
        out << "\n";
    }
    for (size_t id = 1; id < gyr.pool().size(); ++id)
        out << "perm " << pool_name(static_cast<int>(id)) << " = "
            << format_cycles(gyr.pool()[id]) << "\n";
    return out.str();
}

std::string export_graph(const DiGraph& g, GraphFormat format, const ExportOptions& opts) {
    std::ostringstream out;
    if (format == GraphFormat::dot) {
        out << "digraph " << opts.graph_name << " {\n";
        for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
        for (int u = 0; u < g.order(); ++u)
            for (int v : g.out(u)) {
                const bool mutual = g.has_arc(v, u);
                if (mutual && v < u) continue;  // collapsed into the u < v arc
                std::vector<std::string> attrs;
                if (mutual) attrs.push_back("dir=none");
                if (opts.generator_labels) {
                    auto labels = g.arc_labels(u, v);
                    if (mutual && u != v)
                        for (int s : g.arc_labels(v, u)) labels.push_back(s);
                    std::sort(labels.begin(), labels.end());
                    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
                    if (!labels.empty()) {
                        std::string text = "label=\"";
                        for (size_t i = 0; i < labels.size(); ++i) {
                            if (i) text += ',';
                            text += std::to_string(labels[i]);
                        }
                        attrs.push_back(text + "\"");
                    }
                }
                out << "  " << u << " -> " << v;
                if (!attrs.empty()) {
                    out << " [";
                    for (size_t i = 0; i < attrs.size(); ++i) {
                        if (i) out << ", ";
                        out << attrs[i];
                    }
                    out << "]";
                }
                out << ";\n";
            }
        out << "}\n";
    } else {
        out << "{\"n\": " << g.order() << ", \"arcs\": [";
        const auto arcs = g.arcs();
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (i) out << ", ";
            out << "[" << arcs[i].first << ", " << arcs[i].second << "]";
        }
        out << "], \"labels\": [";
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (i) out << ", ";
            out << "[";
            const auto labels = g.arc_labels(arcs[i].first, arcs[i].second);
            for (size_t k = 0; k < labels.size(); ++k) {
                if (k) out << ", ";
                out << labels[k];
            }
            out << "]";
        }
        out << "]}\n";
    }
    return out.str();
}

}  // namespace gyro
