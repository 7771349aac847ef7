#ifndef GGM_GRAPH_IO_HPP
#define GGM_GRAPH_IO_HPP

#include <string>

#include "json.hpp"

#include "ggm/graph.hpp"
#include "ggm/triangulation.hpp"

namespace ggm {

// Graph JSON: {"p": <int>, "edges": [[i,j],...]} with 1-based sorted pairs.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph graph_from_json_file(const std::string& path);
void graph_to_json_file(const Graph& g, const std::string& path);

// Triangulation JSON adds "fill_in": [[i,j],...].
nlohmann::json triangulation_to_json(const Triangulation& t);

}  // namespace ggm

#endif
