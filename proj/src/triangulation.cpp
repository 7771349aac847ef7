#include "ggm/triangulation.hpp"

#include <algorithm>

namespace ggm {

namespace {

std::vector<Edge> missing_edges(const Graph& g) {
    std::vector<Edge> out;
    for (int i = 0; i < g.p(); ++i)
        for (int j = i + 1; j < g.p(); ++j)
            if (!g.has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

std::uint64_t subsets_up_to(int m, int kmax) {
    // sum_{k<=kmax} C(m,k), saturating
    std::uint64_t total = 0, binom = 1;
    for (int k = 0; k <= kmax; ++k) {
        total += binom;
        if (total > (1ull << 62)) return total;
        binom = binom * static_cast<std::uint64_t>(m - k) / static_cast<std::uint64_t>(k + 1);
    }
    return total;
}

}  // namespace

std::vector<Triangulation> minimal_triangulations(const Graph& g, const TriangulationOptions& opts) {
    if (g.p() > 8) throw TooLarge("triangulation search is limited to 8 vertices");

    const std::vector<Edge> candidates = missing_edges(g);
    const int m = static_cast<int>(candidates.size());
    const int kmax = (opts.max_fill < 0 || opts.max_fill > m) ? m : opts.max_fill;
    if (subsets_up_to(m, kmax) > opts.subset_budget)
        throw TooLarge("fill-in subset count exceeds the search budget");

    std::vector<Triangulation> found;
    if (is_decomposable(g)) {
        found.push_back({g, {}, g, true});
        return found;
    }

    // Subsets in increasing size; a triangulation is kept iff every single
    // fill-in removal is non-decomposable (minimal by the removal
    // characterization, so this is not just a minimum-size search).
    std::vector<int> idx;
    for (int k = 1; k <= kmax; ++k) {
        idx.assign(static_cast<size_t>(k), 0);
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            Graph filled = g;
            std::vector<Edge> fill;
            fill.reserve(static_cast<size_t>(k));
            for (int i : idx) {
                fill.push_back(candidates[static_cast<size_t>(i)]);
                filled = filled.with_edge(candidates[static_cast<size_t>(i)].first, candidates[static_cast<size_t>(i)].second);
            }
            if (is_decomposable(filled)) {
                bool minimal = true;
                for (const Edge& f : fill) {
                    if (is_decomposable(filled.without_edge(f.first, f.second))) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) found.push_back({g, fill, filled, true});
            }
            // next k-combination
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < k; ++i) idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
        }
    }
    return found;
}

std::vector<Graph> enumerate_decomposable(int p) {
    if (p > 6) throw TooLarge("exhaustive enumeration is limited to 6 vertices");
    std::vector<Edge> all;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) all.emplace_back(i, j);
    const int m = static_cast<int>(all.size());

    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        Graph g(p);
        for (int b = 0; b < m; ++b)
            if ((mask >> b) & 1ull) g = g.with_edge(all[static_cast<size_t>(b)].first, all[static_cast<size_t>(b)].second);
        if (is_decomposable(g)) out.push_back(g);
    }
    return out;
}

std::uint64_t count_decomposable(int p) { return enumerate_decomposable(p).size(); }

}  // namespace ggm
