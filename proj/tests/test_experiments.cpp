#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ggm/experiments.hpp"

using namespace ggm;

namespace {

std::vector<int> short_grid() {
    std::vector<int> g;
    for (int n = 100; n <= 550; n += 50) g.push_back(n);
    return g;
}

const NamedGraph& by_name(const std::vector<NamedGraph>& fam, const std::string& name) {
    for (const auto& ng : fam)
        if (ng.name == name) return ng;
    throw std::runtime_error("unknown graph name " + name);
}

double slope_of(const std::vector<SlopeReport>& rs, const std::string& pair) {
    for (const auto& r : rs)
        if (r.pair == pair) return r.fitted_slope;
    throw std::runtime_error("missing slope " + pair);
}

}  // namespace

TEST_CASE("fixture graphs are the intended families") {
    const auto f3 = graphs3();
    CHECK(f3.size() == 8);
    CHECK(by_name(f3, "path").graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(by_name(f3, "complete").graph.edge_count() == 3);
    CHECK(model3().true_graph() == by_name(f3, "path").graph);

    const auto f4 = graphs4();
    CHECK(f4.size() == 8);
    const Graph cycle = by_name(f4, "cycle").graph;
    CHECK(!is_decomposable(cycle));
    CHECK(model4().true_graph() == cycle);
    CHECK(is_decomposable(by_name(f4, "tri13").graph));
    CHECK(is_decomposable(by_name(f4, "tri24").graph));
    // the two triangulations are exactly the cycle plus one chord each
    CHECK(by_name(f4, "tri13").graph.has_edge(0, 2));
    CHECK(by_name(f4, "tri24").graph.has_edge(1, 3));
    CHECK(by_name(f4, "tri13").graph.edge_count() == 5);
    CHECK(by_name(f4, "tri24").graph.edge_count() == 5);
}

TEST_CASE("population leading slopes reproduce the known 3-variable terms") {
    const CovModel m = model3();
    const auto f3 = graphs3();
    const Graph truth = by_name(f3, "path").graph;
    auto slope = [&](const std::string& name) {
        return population_leading_slope(m, by_name(f3, name).graph, truth);
    };
    CHECK(slope("empty") == doctest::Approx(-0.2967).scale(1).epsilon(2e-4));
    CHECK(slope("e13") == doctest::Approx(-0.2639).scale(1).epsilon(2e-4));
    CHECK(slope("e23") == doctest::Approx(-0.1767).scale(1).epsilon(2e-4));
    CHECK(slope("e13_e23") == doctest::Approx(-0.1438).scale(1).epsilon(2e-4));
    CHECK(slope("e12") == doctest::Approx(-0.1200).scale(1).epsilon(2e-4));
    CHECK(slope("e12_e13") == doctest::Approx(-0.0872).scale(1).epsilon(2e-4));
    // supergraph of the truth: no linear term
    CHECK(slope("complete") == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("population leading slopes for the 4-variable study") {
    const CovModel m = model4();
    const auto f4 = graphs4();
    // both triangulations factorize the covariance exactly
    const double logdet = population_graph_logdet(m, by_name(f4, "tri13").graph);
    const double logdet2 = population_graph_logdet(m, by_name(f4, "tri24").graph);
    CHECK(logdet == doctest::Approx(logdet2).epsilon(1e-12));
    CHECK(population_leading_slope(m, by_name(f4, "tri24").graph, by_name(f4, "tri13").graph) ==
          doctest::Approx(0.0).scale(1).epsilon(1e-12));
    // all four missing-edge alternatives decay
    for (const char* name : {"path", "path_chord13", "path_chord24", "complete_minus14"}) {
        const double s = population_leading_slope(m, by_name(f4, name).graph, by_name(f4, "tri13").graph);
        CHECK(s < -0.1);
    }
}

TEST_CASE("additions above a truth-covering graph condition on separating sets") {
    // every single-edge step from a graph containing the generating edges up
    // to the complete graph has population partial correlation zero, because
    // the move separator separates the endpoints in the generating graph
    struct Case {
        CovModel model;
        Graph start;
    };
    const auto f4 = graphs4();
    std::vector<Case> cases;
    cases.push_back({model3(), Graph(3, {{0, 1}, {1, 2}})});
    for (const auto& ng : f4)
        if (ng.name == "tri13" || ng.name == "tri24") cases.push_back({model4(), ng.graph});
    for (const auto& c : cases) {
        const auto path = chain_path(c.start, complete_graph(c.model.p()));
        for (size_t i = 1; i < path.size(); ++i) {
            Edge added{-1, -1};
            for (const Edge& e : path[i].edges())
                if (!path[i - 1].has_edge(e.first, e.second)) added = e;
            const VertexSet s = separator_for_move(path[i - 1], added, MoveKind::add);
            const double rho = population_partial_correlation(c.model, added.first, added.second, s);
            CHECK(rho == doctest::Approx(0.0).scale(1).epsilon(1e-12));
        }
    }
}

TEST_CASE("sim1 on a reduced grid") {
    SimOptions opts;
    opts.n_grid = short_grid();
    opts.replicates = 50;
    const Sim1Result res = sim1_slopes(opts, {606, 0});
    CHECK(res.names.size() == 7);
    CHECK(res.slopes.size() == 7);

    // exponential-regime slopes keep the magnitude ordering of the leading
    // terms
    const double s_empty = slope_of(res.slopes, "empty_vs_path");
    const double s_e13 = slope_of(res.slopes, "e13_vs_path");
    const double s_e23 = slope_of(res.slopes, "e23_vs_path");
    const double s_m12 = slope_of(res.slopes, "e13_e23_vs_path");
    const double s_e12 = slope_of(res.slopes, "e12_vs_path");
    const double s_m23 = slope_of(res.slopes, "e12_e13_vs_path");
    CHECK(std::abs(s_empty) > std::abs(s_e13));
    CHECK(std::abs(s_e13) > std::abs(s_e23));
    CHECK(std::abs(s_e23) > std::abs(s_m12));
    CHECK(std::abs(s_m12) > std::abs(s_e12));
    CHECK(std::abs(s_e12) > std::abs(s_m23));

    // each fitted slope sits near its leading term even at this small scale
    for (const auto& r : res.slopes) {
        if (r.regressor == "n") {
            CHECK(r.fitted_slope == doctest::Approx(r.theoretical_slope).scale(1).epsilon(0.15 * std::abs(r.theoretical_slope) + 0.002));
            CHECK(r.slope_se < 0.01);
        } else {
            CHECK(r.pair == "complete_vs_path");
            CHECK(r.theoretical_slope == -0.5);
            CHECK(r.fitted_slope == doctest::Approx(-0.5).scale(1).epsilon(0.25));
        }
    }

    // bit-exact reproducibility
    const Sim1Result res2 = sim1_slopes(opts, {606, 0});
    for (size_t i = 0; i < res.slopes.size(); ++i)
        CHECK(res.slopes[i].fitted_slope == res2.slopes[i].fitted_slope);
    for (size_t gi = 0; gi < res.mean_log_bf.size(); ++gi)
        CHECK(res.mean_log_bf[gi] == res2.mean_log_bf[gi]);
}

TEST_CASE("sim preconditions and budget") {
    SimOptions opts;
    opts.n_grid = {100, 200, 300};
    opts.replicates = 50;
    CHECK_THROWS_AS(sim1_slopes(opts, {1, 0}), InvalidParams);  // too few points

    opts.n_grid = short_grid();
    opts.replicates = 10;
    CHECK_THROWS_AS(sim1_slopes(opts, {1, 0}), InvalidParams);  // too few replicates

    opts.replicates = 50;
    opts.sample_budget = 1000;
    CHECK_THROWS_AS(sim1_slopes(opts, {1, 0}), BudgetExceeded);

    SimOptions bad;
    bad.n_grid = short_grid();
    bad.n_grid[3] = bad.n_grid[2];  // not strictly increasing
    bad.replicates = 50;
    CHECK_THROWS_AS(sim1_slopes(bad, {1, 0}), InvalidParams);
}

TEST_CASE("sim2 on a reduced grid") {
    SimOptions opts;
    opts.n_grid = short_grid();
    opts.replicates = 50;
    const Sim2Result res = sim2_misspecification(opts, {707, 0});
    CHECK(res.alt_names.size() == 4);
    CHECK(res.alt_slopes.size() == 8);

    // the two triangulations stay within a tight band of each other
    CHECK(std::abs(res.cross_slope.fitted_slope) < 5e-4);
    CHECK(res.cross_band_width < 2.0);
    for (size_t ni = 0; ni < res.cross_mean.size(); ++ni) {
        CHECK(res.cross_q05[ni] <= res.cross_mean[ni]);
        CHECK(res.cross_mean[ni] <= res.cross_q95[ni]);
    }

    // missing-edge alternatives decay linearly at their predicted rates
    for (const auto& r : res.alt_slopes) {
        CHECK(r.fitted_slope < 0.0);
        CHECK(r.fitted_slope ==
              doctest::Approx(r.theoretical_slope).scale(1).epsilon(0.2 * std::abs(r.theoretical_slope) + 0.002));
    }

    // adding the one remaining chord to either triangulation: half-log decay
    for (const auto& r : res.complete_slopes) {
        CHECK(r.regressor == "log_n");
        CHECK(r.fitted_slope == doctest::Approx(-0.5).scale(1).epsilon(0.3));
    }
}

TEST_CASE("tail bound check") {
    const std::vector<double> eps = {0.1, 0.2, 0.3, 0.4, 0.5};
    const TailCheckReport rep = tail_bound_check(0.0, 100, 2000, eps, {808, 0});
    CHECK(rep.violations == 0);
    CHECK(rep.empirical_tail.size() == 5);

    // direct arithmetic of the envelope at eps = 0.3
    CHECK(rep.theoretical_bound[2] == doctest::Approx(0.7381).scale(1).epsilon(1e-3));
    // the envelope is vacuous there, yet the empirical tail is far smaller
    CHECK(rep.empirical_tail[2] < 0.02);

    CHECK_THROWS_AS(tail_bound_check(0.5, 100, 100, {0.5}, {1, 0}), InvalidEpsilon);
    CHECK_THROWS_AS(tail_bound_check(0.5, 100, 100, {0.6}, {1, 0}), InvalidEpsilon);

    const TailCheckReport neg = tail_bound_check(-0.7, 200, 2000, {0.05, 0.1, 0.15, 0.2, 0.25}, {809, 0});
    CHECK(neg.violations == 0);
}

TEST_CASE("exact rate check") {
    const RateCheckReport rep = exact_rate_check(50, 0, 4000, 0.1, {909, 0});
    CHECK(rep.m1 == doctest::Approx(1.0 / 121.0).epsilon(1e-12));
    CHECK(rep.m2 == doctest::Approx(6.0 * std::log(50.0)).epsilon(1e-12));
    CHECK(rep.low_ok);
    CHECK(rep.high_ok);
    CHECK(rep.ks_beta < 0.03);

    // conditioning shrinks the effective sample size but the bounds adapt
    const RateCheckReport cond = exact_rate_check(50, 5, 4000, 0.2, {910, 0});
    CHECK(cond.low_ok);
    CHECK(cond.high_ok);
    CHECK(cond.ks_beta < 0.03);

    CHECK_THROWS_AS(exact_rate_check(50, 0, 100, 0.6, {1, 0}), InvalidEpsilon);
    CHECK_THROWS_AS(exact_rate_check(5, 3, 100, 0.1, {1, 0}), InvalidParams);
}
