#ifndef GGM_TEST_ORACLES_HPP
#define GGM_TEST_ORACLES_HPP

// Independent reference implementations used only by tests. Everything here
// deliberately avoids the library's own algorithms: chordality by chordless-
// cycle search, partial correlations by regression residuals, determinants by
// cofactor expansion, and clique enumeration by Bron-Kerbosch.

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

#include "ggm/graph.hpp"
#include "ggm/vertex_set.hpp"

namespace ggm::oracle {

// A chordless cycle of length >= 4 exists iff some vertex subset of size
// >= 4 induces a connected 2-regular subgraph. Exhaustive over subsets.
inline bool has_chordless_cycle(const Graph& g) {
    const int p = g.p();
    for (std::uint64_t mask = 0; mask < (1ull << p); ++mask) {
        VertexSet s(mask);
        if (s.size() < 4) continue;
        bool two_regular = true;
        for (int v : s.to_vector()) {
            if ((g.neighbors(v) & s).size() != 2) {
                two_regular = false;
                break;
            }
        }
        if (!two_regular) continue;
        // connected within s?
        VertexSet comp({s.lowest()});
        for (;;) {
            VertexSet grown = comp;
            for (int v : comp.to_vector()) grown = grown | (g.neighbors(v) & s);
            if (grown == comp) break;
            comp = grown;
        }
        if (comp == s) return true;
    }
    return false;
}

inline bool chordal_by_cycles(const Graph& g) { return !has_chordless_cycle(g); }

// Bron-Kerbosch with pivoting; independent of the MCS-based clique sweep.
inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet pset, VertexSet x, std::vector<VertexSet>& out) {
    if (pset.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (int v : (pset | x).to_vector()) {
        const int deg = (g.neighbors(v) & pset).size();
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    for (int v : (pset - g.neighbors(pivot)).to_vector()) {
        VertexSet rv = r;
        rv.add(v);
        bron_kerbosch(g, rv, pset & g.neighbors(v), x & g.neighbors(v), out);
        pset.remove(v);
        x.add(v);
    }
}

inline std::vector<VertexSet> maximal_cliques_bk(const Graph& g) {
    std::vector<VertexSet> out;
    bron_kerbosch(g, VertexSet(), VertexSet::full(g.p()), VertexSet(), out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// Partial correlation by regressing out the conditioning columns (data are
// assumed column-centered) and correlating the residuals.
inline double residual_partial_correlation(const Eigen::MatrixXd& y, int i, int j, const std::vector<int>& s) {
    Eigen::VectorXd yi = y.col(i), yj = y.col(j);
    if (!s.empty()) {
        Eigen::MatrixXd xs(y.rows(), static_cast<Eigen::Index>(s.size()));
        for (size_t k = 0; k < s.size(); ++k) xs.col(static_cast<Eigen::Index>(k)) = y.col(s[k]);
        const auto qr = xs.colPivHouseholderQr();
        yi -= xs * qr.solve(yi);
        yj -= xs * qr.solve(yj);
    }
    return yi.dot(yj) / std::sqrt(yi.dot(yi) * yj.dot(yj));
}

// Determinant by cofactor expansion along the first row.
inline double cofactor_determinant(const Eigen::MatrixXd& m) {
    const Eigen::Index k = m.rows();
    if (k == 1) return m(0, 0);
    double det = 0.0;
    for (Eigen::Index c = 0; c < k; ++c) {
        Eigen::MatrixXd minor(k - 1, k - 1);
        for (Eigen::Index r = 1; r < k; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c2 = 0; c2 < k; ++c2) {
                if (c2 == c) continue;
                minor(r - 1, cc++) = m(r, c2);
            }
        }
        det += ((c % 2 == 0) ? 1.0 : -1.0) * m(0, c) * cofactor_determinant(minor);
    }
    return det;
}

// All graphs on p labelled vertices, by edge mask.
inline std::vector<Graph> all_graphs(int p) {
    std::vector<Edge> all;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) all.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << all.size()); ++mask) {
        Graph g(p);
        for (size_t b = 0; b < all.size(); ++b)
            if ((mask >> b) & 1ull) g = g.with_edge(all[b].first, all[b].second);
        out.push_back(g);
    }
    return out;
}

}  // namespace ggm::oracle

#endif
