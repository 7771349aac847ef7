#ifndef GGM_TRIANGULATION_HPP
#define GGM_TRIANGULATION_HPP

#include <cstdint>
#include <vector>

#include "ggm/chordal.hpp"
#include "ggm/graph.hpp"

namespace ggm {

// A chordal completion of `base`: result = base plus the fill_in edges.
// minimal means removing any single fill-in edge breaks decomposability.
struct Triangulation {
    Graph base;
    std::vector<Edge> fill_in;
    Graph result;
    bool minimal = false;
};

struct TriangulationOptions {
    int max_fill = -1;                       // -1: up to all missing edges
    std::uint64_t subset_budget = 1u << 22;  // candidate fill-in subsets examined
};

// All minimal triangulations of g with |fill_in| <= max_fill, by brute force
// over fill-in subsets in increasing size. Enforces p <= 8 and the subset
// budget; throws TooLarge beyond either.
std::vector<Triangulation> minimal_triangulations(const Graph& g, const TriangulationOptions& opts = {});

// Every decomposable graph on p labelled vertices, exactly once, in
// increasing edge-mask order. p <= 6.
std::vector<Graph> enumerate_decomposable(int p);

std::uint64_t count_decomposable(int p);

}  // namespace ggm

#endif
