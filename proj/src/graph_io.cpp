#include "impsel/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace impsel {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

}  // namespace

Digraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) {
            continue;  // blank line before the header
        }
        if (tag != "n") {
            parse_fail(line_no, "expected header 'n <count>'");
        }
        if (!(fields >> n) || n < 1) {
            parse_fail(line_no, "invalid vertex count");
        }
        std::string rest;
        if (fields >> rest) {
            parse_fail(line_no, "trailing content after vertex count");
        }
        break;
    }
    if (n < 1) {
        throw std::invalid_argument("line 1: missing header 'n <count>'");
    }

    std::vector<std::pair<int, int>> edge_list;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        int u = 0;
        int v = 0;
        if (!(fields >> u)) {
            continue;  // blank line
        }
        if (!(fields >> v)) {
            parse_fail(line_no, "expected '<u> <v>'");
        }
        std::string rest;
        if (fields >> rest) {
            parse_fail(line_no, "trailing content after edge");
        }
        try {
            // Probe the pair against graph invariants so the error names this line.
            for (const auto& [a, b] : edge_list) {
                if (a == u && b == v) {
                    parse_fail(line_no, "duplicate edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
                }
            }
            Digraph(n, {{u, v}});
        } catch (const std::invalid_argument& e) {
            parse_fail(line_no, e.what());
        }
        edge_list.emplace_back(u, v);
    }
    return Digraph(n, edge_list);
}

std::string graph_to_text(const Digraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) {
        out << u << " " << v << "\n";
    }
    return out.str();
}

Digraph parse_graph_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw std::invalid_argument("graph json must be an object with 'n' and 'edges'");
    }
    if (!j["n"].is_number_integer()) {
        throw std::invalid_argument("graph json: 'n' must be an integer");
    }
    const int n = j["n"].get<int>();
    if (!j["edges"].is_array()) {
        throw std::invalid_argument("graph json: 'edges' must be an array");
    }
    std::vector<std::pair<int, int>> edge_list;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw std::invalid_argument("graph json: each edge must be a [u, v] pair");
        }
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        for (const auto& [a, b] : edge_list) {
            if (a == u && b == v) {
                throw std::invalid_argument("graph json: duplicate edge (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            }
        }
        edge_list.emplace_back(u, v);
    }
    return Digraph(n, edge_list);
}

nlohmann::ordered_json graph_to_json(const Digraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    j["edges"] = std::move(edges);
    return j;
}

Digraph parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        if (c == '{') {
            return parse_graph_json(nlohmann::json::parse(text));
        }
        break;
    }
    return parse_graph_text(text);
}

}  // namespace impsel
