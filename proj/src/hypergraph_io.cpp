#include <algorithm>
#include <charconv>
#include <sstream>

#include "zeon/errors.hpp"
#include "zeon/hypergraph.hpp"

namespace zeon {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 1;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        out.push_back({number++, line});
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    return out;
}

bool is_blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

bool is_comment(std::string_view s) {
    const auto p = s.find_first_not_of(" \t");
    return p != std::string_view::npos && s[p] == '#';
}

std::vector<std::uint64_t> parse_numbers(const Line& line) {
    std::vector<std::uint64_t> out;
    std::string_view s = line.text;
    while (true) {
        const auto start = s.find_first_not_of(" \t");
        if (start == std::string_view::npos) {
            break;
        }
        s.remove_prefix(start);
        const auto end = std::min(s.find_first_of(" \t"), s.size());
        const std::string_view token = s.substr(0, end);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw ParseError(line.number, "expected a non-negative integer, got '" +
                                              std::string(token) + "'");
        }
        out.push_back(value);
        s.remove_prefix(end);
    }
    return out;
}

VertexSet to_edge(const std::vector<std::uint64_t>& ids, std::size_t n, std::size_t line) {
    if (ids.empty()) {
        throw ParseError(line, "empty hyperedge");
    }
    VertexSet edge;
    for (auto id : ids) {
        if (id < 1 || id > n) {
            throw ParseError(line, "vertex id " + std::to_string(id) + " out of range 1.." +
                                       std::to_string(n));
        }
        edge.push_back(static_cast<Vertex>(id - 1));
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
        throw ParseError(line, "vertex repeated within a hyperedge");
    }
    return edge;
}

}  // namespace

Hypergraph parse_text(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && (is_blank(lines[i].text) || is_comment(lines[i].text))) {
        ++i;
    }
    if (i == lines.size()) {
        throw ParseError(lines.empty() ? 1 : lines.back().number, "missing header 'n m'");
    }
    const auto header = parse_numbers(lines[i]);
    if (header.size() != 2) {
        throw ParseError(lines[i].number, "header must be 'n m'");
    }
    const std::size_t n = header[0];
    const std::size_t m = header[1];
    ++i;
    std::vector<VertexSet> edges;
    while (edges.size() < m) {
        if (i == lines.size()) {
            throw ParseError(lines.back().number + 1, "expected " + std::to_string(m) +
                                                          " hyperedges, found " +
                                                          std::to_string(edges.size()));
        }
        if (is_comment(lines[i].text)) {
            ++i;
            continue;
        }
        edges.push_back(to_edge(parse_numbers(lines[i]), n, lines[i].number));
        ++i;
    }
    for (; i < lines.size(); ++i) {
        if (!is_blank(lines[i].text) && !is_comment(lines[i].text)) {
            throw ParseError(lines[i].number, "unexpected content after " + std::to_string(m) +
                                                  " hyperedges");
        }
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset only; report line 1-based from it
        std::size_t line = 1;
        for (std::size_t k = 0; k < std::min<std::size_t>(e.byte, text.size()); ++k) {
            line += text[k] == '\n';
        }
        throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_unsigned() || !doc["edges"].is_array()) {
        throw ParseError(1, "JSON hypergraph needs unsigned \"n\" and array \"edges\"");
    }
    const auto n = doc["n"].get<std::size_t>();
    std::vector<VertexSet> edges;
    for (std::size_t e = 0; e < doc["edges"].size(); ++e) {
        const auto& arr = doc["edges"][e];
        if (!arr.is_array()) {
            throw ParseError(1, "edge " + std::to_string(e + 1) + " is not an array");
        }
        std::vector<std::uint64_t> ids;
        for (const auto& v : arr) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
                throw ParseError(1, "edge " + std::to_string(e + 1) + " holds a non-integer id");
            }
            ids.push_back(v.get<std::uint64_t>());
        }
        try {
            edges.push_back(to_edge(ids, n, 1));
        } catch (const ParseError& err) {
            throw ParseError(1, "edge " + std::to_string(e + 1) + ": " + err.what());
        }
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string_view::npos && text[p] == '{') {
        return parse_json(text);
    }
    return parse_text(text);
}

std::string emit_text(const Hypergraph& h) {
    std::ostringstream os;
    os << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t k = 0; k < e.size(); ++k) {
            os << (k ? " " : "") << e[k] + 1;
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const Hypergraph& h) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : h.edges()) {
        nlohmann::json arr = nlohmann::json::array();
        for (Vertex v : e) {
            arr.push_back(v + 1);
        }
        edges.push_back(std::move(arr));
    }
    return {{"n", h.vertex_count()}, {"edges", std::move(edges)}};
}

}  // namespace zeon
