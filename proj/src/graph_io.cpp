#include "ggm/graph_io.hpp"

#include <fstream>

namespace ggm {

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
    return {{"p", g.p()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("p") || !j.contains("edges")) throw DataError("graph JSON needs \"p\" and \"edges\"");
    const int p = j.at("p").get<int>();
    Graph g(p);
    for (const auto& e : j.at("edges")) {
        if (e.size() != 2) throw DataError("graph edge must be a pair");
        const int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 1 || b < 1 || a > p || b > p) throw DataError("edge endpoint outside 1..p");
        g = g.with_edge(std::min(a, b) - 1, std::max(a, b) - 1);
    }
    return g;
}

Graph graph_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open graph file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("invalid JSON in " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

void graph_to_json_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write graph file: " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

nlohmann::json triangulation_to_json(const Triangulation& t) {
    nlohmann::json j = graph_to_json(t.result);
    nlohmann::json fill = nlohmann::json::array();
    for (const auto& [i, k] : t.fill_in) fill.push_back({i + 1, k + 1});
    j["fill_in"] = fill;
    j["minimal"] = t.minimal;
    return j;
}

}  // namespace ggm
