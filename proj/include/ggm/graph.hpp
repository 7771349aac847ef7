#ifndef GGM_GRAPH_HPP
#define GGM_GRAPH_HPP

#include <utility>
#include <vector>

#include "ggm/errors.hpp"
#include "ggm/vertex_set.hpp"

namespace ggm {

using Edge = std::pair<int, int>;  // 0-based endpoints, first < second

// Undirected labelled graph on p vertices (0-based internally, 1-based in all
// external formats). Graphs are immutable values: single-edge moves return
// new graphs.
class Graph {
  public:
    explicit Graph(int p) : p_(p), adj_(static_cast<size_t>(p)) {
        if (p < 1 || p > 64) throw InvalidParams("vertex count must be in 1..64");
    }

    Graph(int p, const std::vector<Edge>& edges) : Graph(p) {
        for (const auto& [i, j] : edges) add_edge_in_place(i, j);
    }

    int p() const { return p_; }
    int edge_count() const { return n_edges_; }
    int max_edges() const { return p_ * (p_ - 1) / 2; }

    bool has_edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return adj_[static_cast<size_t>(i)].contains(j);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    // Edges as sorted (i,j) pairs with i < j.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(n_edges_));
        for (int i = 0; i < p_; ++i)
            for (int j : (adj_[static_cast<size_t>(i)] - VertexSet::full(i + 1)).to_vector())
                out.emplace_back(i, j);
        return out;
    }

    Graph with_edge(int i, int j) const {
        Graph g = *this;
        if (g.has_edge(i, j)) throw EdgePresent();
        g.add_edge_in_place(i, j);
        return g;
    }

    Graph without_edge(int i, int j) const {
        Graph g = *this;
        if (!g.has_edge(i, j)) throw EdgeAbsent();
        g.adj_[static_cast<size_t>(i)].remove(j);
        g.adj_[static_cast<size_t>(j)].remove(i);
        --g.n_edges_;
        return g;
    }

    bool is_subgraph_of(const Graph& o) const {
        if (p_ != o.p_) return false;
        for (int v = 0; v < p_; ++v)
            if (!adj_[static_cast<size_t>(v)].subset_of(o.adj_[static_cast<size_t>(v)])) return false;
        return true;
    }

    bool is_complete(VertexSet s) const {
        for (int v : s.to_vector())
            if (!(s - VertexSet({v})).subset_of(adj_[static_cast<size_t>(v)])) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.p_ == b.p_ && a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

    // Canonical 128-bit-safe key: packs the upper-triangular adjacency for
    // p <= 16 into one word, otherwise falls back to a polynomial hash.
    std::uint64_t edge_key() const {
        std::uint64_t key = 0;
        if (max_edges() <= 64) {
            int bit = 0;
            for (int i = 0; i < p_; ++i)
                for (int j = i + 1; j < p_; ++j, ++bit)
                    if (has_edge(i, j)) key |= (1ull << bit);
            return key;
        }
        for (int v = 0; v < p_; ++v) key = key * 1000003ull + adj_[static_cast<size_t>(v)].bits();
        return key;
    }

  private:
    void add_edge_in_place(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw InvalidParams("self-loops are not allowed");
        if (adj_[static_cast<size_t>(i)].contains(j)) throw InvalidParams("duplicate edge");
        adj_[static_cast<size_t>(i)].add(j);
        adj_[static_cast<size_t>(j)].add(i);
        ++n_edges_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= p_) throw InvalidParams("vertex label out of range");
    }

    int p_;
    std::vector<VertexSet> adj_;
    int n_edges_ = 0;
};

// Edge-set order used to break ties deterministically when reporting modes.
inline bool edge_lex_less(const Graph& a, const Graph& b) {
    return a.edges() < b.edges();
}

inline Graph complete_graph(int p) {
    Graph g(p);
    std::vector<Edge> es;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) es.emplace_back(i, j);
    return Graph(p, es);
}

}  // namespace ggm

#endif
