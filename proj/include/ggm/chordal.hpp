#ifndef GGM_CHORDAL_HPP
#define GGM_CHORDAL_HPP

#include <optional>
#include <vector>

#include "ggm/graph.hpp"
#include "ggm/vertex_set.hpp"

namespace ggm {

// Perfect-ordered clique decomposition of a decomposable graph. cliques[0] is
// C_1; separators[i-1] = C_i ∩ (C_1 ∪ ... ∪ C_{i-1}) and is contained in
// cliques[parent[i-1]]. Disconnected components are joined by empty
// separators so the structure always spans all cliques.
struct JunctionTree {
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> separators;  // separators[i-1] belongs to cliques[i], i >= 1
    std::vector<int> parent;            // parent[i-1] < i is the attach clique of cliques[i]
};

enum class MoveKind { add, remove };

struct EdgeMove {
    Edge edge;
    MoveKind kind;
};

// Maximum cardinality search visit order with ties broken by lowest vertex
// label; start defaults to the lowest label of each component.
std::vector<int> mcs_order(const Graph& g, int start = 0);

bool is_decomposable(const Graph& g);

// Requires is_decomposable(g); throws NotDecomposable otherwise. Cliques come
// from the MCS sweep; the tree is a maximum-weight spanning tree on clique
// intersections, visited from the lexicographically smallest clique, so the
// output is deterministic.
JunctionTree junction_tree(const Graph& g);

// Variant used by the ordering-invariance tests: same construction but the
// MCS starts from the given vertex.
JunctionTree junction_tree_from(const Graph& g, int start_vertex);

// True iff the clique sequence satisfies the running intersection property
// for the graph it was built from.
bool has_running_intersection(const JunctionTree& jt);

std::vector<VertexSet> maximal_cliques(const Graph& g);  // via the MCS sweep; requires decomposable

// Deleting edge e keeps the graph decomposable iff its endpoints lie in
// exactly one clique.
bool legal_delete(const Graph& g, Edge e);

// Add-and-test: the authoritative legality check for additions.
bool legal_add(const Graph& g, Edge e);

// Structural criterion equivalent to legal_add: endpoints in different
// connected components, or two cliques C_x ∋ x, C_y ∋ y whose intersection
// attains the minimum separator cardinality on their junction-tree path (so
// the tree can be rewired to make them adjacent). Validated against
// legal_add by property tests; usable as a fast path.
bool legal_add_structural(const Graph& g, Edge e);

// Conditioning set of a single-edge move: C \ {x,y} for the unique clique
// containing a deletable edge; for additions, the unique clique of g+e
// containing the new edge, minus {x,y}.
VertexSet separator_for_move(const Graph& g, Edge e, MoveKind kind);

// All legal single-edge moves of g, deletions and additions, in edge order.
std::vector<EdgeMove> legal_moves(const Graph& g);

// Increasing chain g_from = G_0 ⊂ ... ⊂ G_k = g_to of decomposable graphs,
// one edge per step, adding the lexicographically smallest legal edge first.
std::vector<Graph> chain_path(const Graph& g_from, const Graph& g_to);

VertexSet component_of(const Graph& g, int v);

}  // namespace ggm

#endif
