#include "ggm/chordal.hpp"

#include <algorithm>
#include <limits>

namespace ggm {

namespace {

// One MCS sweep. Returns the visit order and, through `cliques`, the maximal
// cliques of a chordal graph (clique boundaries are where the count of
// previously visited neighbors fails to grow). The clique extraction is only
// meaningful when the graph is chordal; the chordality check below does not
// rely on it.
std::vector<int> mcs_sweep(const Graph& g, int start, std::vector<VertexSet>* cliques) {
    const int p = g.p();
    std::vector<int> weight(static_cast<size_t>(p), 0);
    std::vector<bool> visited(static_cast<size_t>(p), false);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(p));

    VertexSet seen;
    int prev_count = -1;

    for (int step = 0; step < p; ++step) {
        int v = -1;
        if (step == 0) {
            v = start;
        } else {
            int best = -1;
            for (int u = 0; u < p; ++u) {
                if (!visited[static_cast<size_t>(u)] && weight[static_cast<size_t>(u)] > best) {
                    best = weight[static_cast<size_t>(u)];
                    v = u;
                }
            }
        }
        visited[static_cast<size_t>(v)] = true;
        order.push_back(v);
        const int count = (g.neighbors(v) & seen).size();
        if (cliques != nullptr && step > 0 && count <= prev_count) {
            const int u = order[static_cast<size_t>(step - 1)];
            cliques->push_back((g.neighbors(u) & seen) | VertexSet({u}));
        }
        prev_count = count;
        seen.add(v);
        for (int u : g.neighbors(v).to_vector())
            if (!visited[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
    }
    if (cliques != nullptr && p > 0) {
        const int u = order.back();
        cliques->push_back((g.neighbors(u) & seen) | VertexSet({u}));
    }
    return order;
}

// Zero fill-in check on an MCS order (Tarjan-Yannakakis): for each vertex,
// its earlier neighbors minus the latest one must be neighbors of that
// latest one.
bool order_is_peo(const Graph& g, const std::vector<int>& order) {
    const int p = g.p();
    std::vector<int> pos(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

    VertexSet seen;
    for (int i = 0; i < p; ++i) {
        const int v = order[static_cast<size_t>(i)];
        VertexSet earlier = g.neighbors(v) & seen;
        if (earlier.size() >= 2) {
            int last = -1, best_pos = -1;
            for (int u : earlier.to_vector()) {
                if (pos[static_cast<size_t>(u)] > best_pos) {
                    best_pos = pos[static_cast<size_t>(u)];
                    last = u;
                }
            }
            VertexSet rest = earlier - VertexSet({last});
            if (!rest.subset_of(g.neighbors(last))) return false;
        }
        seen.add(v);
    }
    return true;
}

JunctionTree build_tree(std::vector<VertexSet> cliques, bool lex_sort) {
    // The canonical tree sorts cliques for a deterministic output; the
    // from-start variant keeps MCS discovery order so that different start
    // vertices produce genuinely different perfect orderings.
    if (lex_sort) std::sort(cliques.begin(), cliques.end(), lex_less);

    const int k = static_cast<int>(cliques.size());
    JunctionTree jt;
    if (k == 0) return jt;

    // Prim over the complete clique graph weighted by intersection size.
    // Visit order doubles as the perfect ordering; ties go to the
    // lexicographically smallest unvisited clique.
    std::vector<bool> in_tree(static_cast<size_t>(k), false);
    std::vector<int> order;
    std::vector<int> parent_of(static_cast<size_t>(k), -1);
    order.reserve(static_cast<size_t>(k));
    in_tree[0] = true;
    order.push_back(0);
    for (int step = 1; step < k; ++step) {
        int best_w = -1, best_c = -1, best_parent = -1;
        for (int c = 0; c < k; ++c) {
            if (in_tree[static_cast<size_t>(c)]) continue;
            for (int t : order) {
                const int w = (cliques[static_cast<size_t>(c)] & cliques[static_cast<size_t>(t)]).size();
                bool better = w > best_w;
                if (w == best_w && best_c >= 0) {
                    if (c != best_c)
                        better = lex_less(cliques[static_cast<size_t>(c)], cliques[static_cast<size_t>(best_c)]);
                    else
                        better = lex_less(cliques[static_cast<size_t>(t)], cliques[static_cast<size_t>(best_parent)]);
                }
                if (better) {
                    best_w = w;
                    best_c = c;
                    best_parent = t;
                }
            }
        }
        in_tree[static_cast<size_t>(best_c)] = true;
        order.push_back(best_c);
        parent_of[static_cast<size_t>(best_c)] = best_parent;
    }

    std::vector<int> rank(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    jt.cliques.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) jt.cliques.push_back(cliques[static_cast<size_t>(order[static_cast<size_t>(i)])]);
    for (int i = 1; i < k; ++i) {
        const int c = order[static_cast<size_t>(i)];
        const int par = parent_of[static_cast<size_t>(c)];
        jt.parent.push_back(rank[static_cast<size_t>(par)]);
        jt.separators.push_back(cliques[static_cast<size_t>(c)] & cliques[static_cast<size_t>(par)]);
    }
    return jt;
}

}  // namespace

std::vector<int> mcs_order(const Graph& g, int start) { return mcs_sweep(g, start, nullptr); }

bool is_decomposable(const Graph& g) { return order_is_peo(g, mcs_sweep(g, 0, nullptr)); }

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> cliques;
    std::vector<int> order = mcs_sweep(g, 0, &cliques);
    if (!order_is_peo(g, order)) throw NotDecomposable();
    return cliques;
}

JunctionTree junction_tree(const Graph& g) { return build_tree(maximal_cliques(g), true); }

JunctionTree junction_tree_from(const Graph& g, int start_vertex) {
    std::vector<VertexSet> cliques;
    std::vector<int> order = mcs_sweep(g, start_vertex, &cliques);
    if (!order_is_peo(g, order)) throw NotDecomposable();
    return build_tree(std::move(cliques), false);
}

bool has_running_intersection(const JunctionTree& jt) {
    VertexSet history;
    for (size_t i = 0; i < jt.cliques.size(); ++i) {
        if (i > 0) {
            VertexSet inter = jt.cliques[i] & history;
            if (inter != jt.separators[i - 1]) return false;
            const int par = jt.parent[i - 1];
            if (par < 0 || par >= static_cast<int>(i)) return false;
            if (!inter.subset_of(jt.cliques[static_cast<size_t>(par)])) return false;
        }
        history = history | jt.cliques[i];
    }
    return true;
}

bool legal_delete(const Graph& g, Edge e) {
    if (!g.has_edge(e.first, e.second)) throw EdgeAbsent();
    int count = 0;
    for (const VertexSet& c : maximal_cliques(g))
        if (c.contains(e.first) && c.contains(e.second)) ++count;
    return count == 1;
}

bool legal_add(const Graph& g, Edge e) {
    // Pure add-and-test. Also usable on a non-decomposable g, where it asks
    // whether e completes a triangulation.
    if (g.has_edge(e.first, e.second)) throw EdgePresent();
    return is_decomposable(g.with_edge(e.first, e.second));
}

VertexSet component_of(const Graph& g, int v) {
    VertexSet comp({v});
    VertexSet frontier({v});
    while (!frontier.empty()) {
        VertexSet next;
        for (int u : frontier.to_vector()) next = next | g.neighbors(u);
        frontier = next - comp;
        comp = comp | next;
    }
    return comp;
}

bool legal_add_structural(const Graph& g, Edge e) {
    const auto [x, y] = e;
    if (g.has_edge(x, y)) throw EdgePresent();
    if (!is_decomposable(g)) return legal_add(g, e);  // clique structure unavailable
    if (!component_of(g, x).contains(y)) return true;

    JunctionTree jt = junction_tree(g);
    const int k = static_cast<int>(jt.cliques.size());

    // Tree adjacency from the parent array.
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(k));
    for (int i = 1; i < k; ++i) {
        nbrs[static_cast<size_t>(i)].push_back(jt.parent[static_cast<size_t>(i - 1)]);
        nbrs[static_cast<size_t>(jt.parent[static_cast<size_t>(i - 1)])].push_back(i);
    }

    auto path_min_sep = [&](int from, int to) {
        // BFS path, then the smallest |C_i ∩ C_parent| along it.
        std::vector<int> prev(static_cast<size_t>(k), -1);
        std::vector<bool> seen(static_cast<size_t>(k), false);
        std::vector<int> queue{from};
        seen[static_cast<size_t>(from)] = true;
        for (size_t q = 0; q < queue.size(); ++q) {
            int c = queue[q];
            for (int u : nbrs[static_cast<size_t>(c)]) {
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = true;
                    prev[static_cast<size_t>(u)] = c;
                    queue.push_back(u);
                }
            }
        }
        int min_sep = std::numeric_limits<int>::max();
        for (int c = to; c != from; c = prev[static_cast<size_t>(c)])
            min_sep = std::min(min_sep, (jt.cliques[static_cast<size_t>(c)] & jt.cliques[static_cast<size_t>(prev[static_cast<size_t>(c)])]).size());
        return min_sep;
    };

    for (int cx = 0; cx < k; ++cx) {
        if (!jt.cliques[static_cast<size_t>(cx)].contains(x)) continue;
        for (int cy = 0; cy < k; ++cy) {
            if (!jt.cliques[static_cast<size_t>(cy)].contains(y)) continue;
            const int inter = (jt.cliques[static_cast<size_t>(cx)] & jt.cliques[static_cast<size_t>(cy)]).size();
            if (path_min_sep(cx, cy) == inter) return true;
        }
    }
    return false;
}

VertexSet separator_for_move(const Graph& g, Edge e, MoveKind kind) {
    const auto [x, y] = e;
    if (kind == MoveKind::remove) {
        if (!g.has_edge(x, y)) throw IllegalMove("cannot delete an absent edge");
        VertexSet found;
        int count = 0;
        for (const VertexSet& c : maximal_cliques(g)) {
            if (c.contains(x) && c.contains(y)) {
                found = c;
                ++count;
            }
        }
        if (count != 1) throw IllegalMove("edge endpoints lie in more than one clique");
        return found - VertexSet({x, y});
    }
    if (g.has_edge(x, y)) throw IllegalMove("cannot add a present edge");
    Graph g2 = g.with_edge(x, y);
    if (!is_decomposable(g2)) throw IllegalMove("addition breaks decomposability");
    // The new edge is deletable in g+e, so exactly one clique holds it.
    for (const VertexSet& c : maximal_cliques(g2))
        if (c.contains(x) && c.contains(y)) return c - VertexSet({x, y});
    throw IllegalMove("no clique contains the added edge");  // unreachable
}

std::vector<EdgeMove> legal_moves(const Graph& g) {
    std::vector<EdgeMove> moves;
    for (int i = 0; i < g.p(); ++i) {
        for (int j = i + 1; j < g.p(); ++j) {
            Edge e{i, j};
            if (g.has_edge(i, j)) {
                if (legal_delete(g, e)) moves.push_back({e, MoveKind::remove});
            } else if (legal_add(g, e)) {
                moves.push_back({e, MoveKind::add});
            }
        }
    }
    return moves;
}

std::vector<Graph> chain_path(const Graph& g_from, const Graph& g_to) {
    if (g_from.p() != g_to.p() || !g_from.is_subgraph_of(g_to)) throw NotNested();
    if (!is_decomposable(g_from) || !is_decomposable(g_to)) throw NotDecomposable();

    std::vector<Graph> path{g_from};
    Graph current = g_from;
    while (current != g_to) {
        bool advanced = false;
        for (const auto& [i, j] : g_to.edges()) {
            if (current.has_edge(i, j)) continue;
            Graph next = current.with_edge(i, j);
            if (is_decomposable(next)) {
                current = next;
                path.push_back(current);
                advanced = true;
                break;
            }
        }
        if (!advanced) throw NotDecomposable("no legal single-edge extension exists");  // cannot happen for nested decomposable pairs
    }
    return path;
}

}  // namespace ggm
