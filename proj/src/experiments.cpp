#include "ggm/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "ggm/parallel.hpp"

namespace ggm {

namespace {

Eigen::MatrixXd precision3() {
    Eigen::MatrixXd omega(3, 3);
    omega << 2.0, 1.0, 0.0,
             1.0, 2.0, 0.8,
             0.0, 0.8, 2.0;
    return omega;
}

Eigen::MatrixXd precision4() {
    Eigen::MatrixXd omega(4, 4);
    omega << 2.0, 1.2, 0.0, 1.0,
             1.2, 3.0, 1.2, 0.0,
             0.0, 1.2, 3.0, 1.0,
             1.0, 0.0, 1.0, 2.0;
    return omega;
}

double logdet_psd(const Eigen::MatrixXd& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) throw NotPositiveDefinite();
    double out = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) out += 2.0 * std::log(llt.matrixLLT()(i, i));
    return out;
}

Eigen::MatrixXd sigma_sub(const Eigen::MatrixXd& sigma, VertexSet s) {
    const std::vector<int> v = s.to_vector();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = 0; b < v.size(); ++b) out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sigma(v[a], v[b]);
    return out;
}

std::uint64_t cell_stream(int rep, int n_index) { return (static_cast<std::uint64_t>(rep) << 20) | static_cast<std::uint64_t>(n_index); }

void check_sim_preconditions(const SimOptions& opts, int p) {
    if (opts.n_grid.size() < 10) throw InvalidParams("slope fits need at least 10 grid points");
    for (size_t i = 1; i < opts.n_grid.size(); ++i)
        if (opts.n_grid[i] <= opts.n_grid[i - 1]) throw InvalidParams("n grid must be strictly increasing");
    if (opts.n_grid.back() < 500) throw InvalidParams("largest n must be at least 500");
    if (opts.replicates < 50) throw InvalidParams("need at least 50 replicates");
    std::uint64_t draws = 0;
    for (int n : opts.n_grid) draws += static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(p);
    draws *= static_cast<std::uint64_t>(opts.replicates);
    if (draws > opts.sample_budget) throw BudgetExceeded("grid x replicates exceeds the sampling budget");
}

SlopeReport make_slope(const std::string& pair, const std::string& regressor, const std::vector<double>& xs,
                       const std::vector<double>& ys, double theoretical, const SimOptions& opts) {
    const OlsFit fit = ols_fit(xs, ys);
    SlopeReport r;
    r.pair = pair;
    r.regressor = regressor;
    r.fitted_slope = fit.slope;
    r.theoretical_slope = theoretical;
    r.relative_error = theoretical != 0.0 ? std::abs(fit.slope - theoretical) / std::abs(theoretical) : 0.0;
    r.slope_se = fit.slope_se;
    r.n_grid = opts.n_grid;
    r.replicates = opts.replicates;
    return r;
}

}  // namespace

CovModel model3() { return CovModel::from_precision(precision3()); }
CovModel model4() { return CovModel::from_precision(precision4()); }

std::vector<NamedGraph> graphs3() {
    auto g = [](std::vector<Edge> es) { return Graph(3, es); };
    return {
        {"empty", g({})},
        {"e12", g({{0, 1}})},
        {"e13", g({{0, 2}})},
        {"e23", g({{1, 2}})},
        {"e12_e13", g({{0, 1}, {0, 2}})},
        {"path", g({{0, 1}, {1, 2}})},  // the data-generating graph
        {"e13_e23", g({{0, 2}, {1, 2}})},
        {"complete", g({{0, 1}, {0, 2}, {1, 2}})},
    };
}

std::vector<NamedGraph> graphs4() {
    auto g = [](std::vector<Edge> es) { return Graph(4, es); };
    return {
        {"path", g({{0, 1}, {1, 2}, {2, 3}})},
        {"path_chord13", g({{0, 1}, {1, 2}, {2, 3}, {0, 2}})},
        {"path_chord24", g({{0, 1}, {1, 2}, {2, 3}, {1, 3}})},
        {"complete_minus14", g({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
        {"tri13", g({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})},
        {"tri24", g({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}})},
        {"cycle", g({{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
        {"complete", complete_graph(4)},
    };
}

double population_graph_logdet(const CovModel& model, const Graph& g) {
    const JunctionTree jt = junction_tree(g);
    double out = 0.0;
    for (const VertexSet& c : jt.cliques) out += logdet_psd(sigma_sub(model.sigma(), c));
    for (const VertexSet& s : jt.separators)
        if (!s.empty()) out -= logdet_psd(sigma_sub(model.sigma(), s));
    return out;
}

double population_leading_slope(const CovModel& model, const Graph& g_a, const Graph& g_ref) {
    return -0.5 * (population_graph_logdet(model, g_a) - population_graph_logdet(model, g_ref));
}

std::vector<int> default_n_grid() {
    std::vector<int> grid;
    for (int n = 100; n <= 3000; n += 100) grid.push_back(n);
    return grid;
}

Sim1Result sim1_slopes(const SimOptions& opts, RngSeed seed) {
    const CovModel model = model3();
    check_sim_preconditions(opts, model.p());
    const std::vector<NamedGraph> family = graphs3();
    const size_t ref = 5;  // the data-generating path graph
    const int gi_count = static_cast<int>(family.size());
    const int ni_count = static_cast<int>(opts.n_grid.size());

    // raw[rep][gi][ni] = log BF(family[gi]; reference) on that replicate
    std::vector<std::vector<std::vector<double>>> raw(
        static_cast<size_t>(opts.replicates),
        std::vector<std::vector<double>>(static_cast<size_t>(gi_count), std::vector<double>(static_cast<size_t>(ni_count))));

    parallel_for(opts.replicates, [&](int rep) {
        for (int ni = 0; ni < ni_count; ++ni) {
            const int n = opts.n_grid[static_cast<size_t>(ni)];
            const DataMatrix d = sample_gaussian(model, n, seed.with_stream(cell_stream(rep, ni)));
            ModelParams params = ModelParams::for_data(d, opts.b);
            HiwScorer scorer(d, params);
            const double ref_ml = scorer.log_marginal_likelihood(family[ref].graph);
            for (int gi = 0; gi < gi_count; ++gi) {
                if (gi == static_cast<int>(ref)) continue;
                raw[static_cast<size_t>(rep)][static_cast<size_t>(gi)][static_cast<size_t>(ni)] =
                    scorer.log_marginal_likelihood(family[static_cast<size_t>(gi)].graph) - ref_ml;
            }
        }
    }, opts.threads);

    Sim1Result out;
    out.n_grid = opts.n_grid;
    out.replicates = opts.replicates;
    std::vector<double> xs_n(opts.n_grid.begin(), opts.n_grid.end());
    std::vector<double> xs_logn;
    for (int n : opts.n_grid) xs_logn.push_back(std::log(static_cast<double>(n)));

    for (int gi = 0; gi < gi_count; ++gi) {
        if (gi == static_cast<int>(ref)) continue;
        std::vector<double> means(static_cast<size_t>(ni_count), 0.0);
        for (int ni = 0; ni < ni_count; ++ni) {
            double acc = 0.0;
            for (int rep = 0; rep < opts.replicates; ++rep)
                acc += raw[static_cast<size_t>(rep)][static_cast<size_t>(gi)][static_cast<size_t>(ni)];
            means[static_cast<size_t>(ni)] = acc / opts.replicates;
        }
        out.names.push_back(family[static_cast<size_t>(gi)].name);
        out.mean_log_bf.push_back(means);

        const std::string pair = family[static_cast<size_t>(gi)].name + "_vs_path";
        const Graph& ga = family[static_cast<size_t>(gi)].graph;
        if (family[ref].graph.is_subgraph_of(ga)) {
            // pure additions of conditionally independent edges: polynomial in
            // n, -1/2 per added edge against log n
            const double theo = -0.5 * (ga.edge_count() - family[ref].graph.edge_count());
            out.slopes.push_back(make_slope(pair, "log_n", xs_logn, means, theo, opts));
        } else {
            const double theo = population_leading_slope(model, ga, family[ref].graph);
            out.slopes.push_back(make_slope(pair, "n", xs_n, means, theo, opts));
        }
    }
    return out;
}

Sim2Result sim2_misspecification(const SimOptions& opts, RngSeed seed) {
    const CovModel model = model4();
    check_sim_preconditions(opts, model.p());
    const std::vector<NamedGraph> family = graphs4();
    const int ni_count = static_cast<int>(opts.n_grid.size());

    const std::vector<size_t> alts = {0, 1, 2, 3};  // graphs missing cycle edge 1-4
    const size_t tri13 = 4, tri24 = 5, complete = 7;

    struct Cell {
        std::vector<double> vs13;  // per alternative
        std::vector<double> vs24;
        double cross = 0.0;     // log BF(tri24; tri13)
        double complete13 = 0.0;
        double complete24 = 0.0;
    };
    std::vector<std::vector<Cell>> raw(static_cast<size_t>(opts.replicates),
                                       std::vector<Cell>(static_cast<size_t>(ni_count)));

    parallel_for(opts.replicates, [&](int rep) {
        for (int ni = 0; ni < ni_count; ++ni) {
            const int n = opts.n_grid[static_cast<size_t>(ni)];
            const DataMatrix d = sample_gaussian(model, n, seed.with_stream(cell_stream(rep, ni)));
            ModelParams params = ModelParams::for_data(d, opts.b);
            HiwScorer scorer(d, params);
            const double ml13 = scorer.log_marginal_likelihood(family[tri13].graph);
            const double ml24 = scorer.log_marginal_likelihood(family[tri24].graph);
            const double mlc = scorer.log_marginal_likelihood(family[complete].graph);
            Cell& cell = raw[static_cast<size_t>(rep)][static_cast<size_t>(ni)];
            cell.cross = ml24 - ml13;
            cell.complete13 = mlc - ml13;
            cell.complete24 = mlc - ml24;
            for (size_t a : alts) {
                const double ml = scorer.log_marginal_likelihood(family[a].graph);
                cell.vs13.push_back(ml - ml13);
                cell.vs24.push_back(ml - ml24);
            }
        }
    }, opts.threads);

    Sim2Result out;
    out.n_grid = opts.n_grid;
    out.replicates = opts.replicates;
    std::vector<double> xs_n(opts.n_grid.begin(), opts.n_grid.end());
    std::vector<double> xs_logn;
    for (int n : opts.n_grid) xs_logn.push_back(std::log(static_cast<double>(n)));

    for (size_t ai = 0; ai < alts.size(); ++ai) {
        out.alt_names.push_back(family[alts[ai]].name);
        std::vector<double> m13(static_cast<size_t>(ni_count), 0.0), m24(static_cast<size_t>(ni_count), 0.0);
        for (int ni = 0; ni < ni_count; ++ni) {
            double a13 = 0.0, a24 = 0.0;
            for (int rep = 0; rep < opts.replicates; ++rep) {
                a13 += raw[static_cast<size_t>(rep)][static_cast<size_t>(ni)].vs13[ai];
                a24 += raw[static_cast<size_t>(rep)][static_cast<size_t>(ni)].vs24[ai];
            }
            m13[static_cast<size_t>(ni)] = a13 / opts.replicates;
            m24[static_cast<size_t>(ni)] = a24 / opts.replicates;
        }
        out.mean_vs_tri13.push_back(m13);
        out.mean_vs_tri24.push_back(m24);
        const Graph& ga = family[alts[ai]].graph;
        out.alt_slopes.push_back(make_slope(family[alts[ai]].name + "_vs_tri13", "n", xs_n, m13,
                                            population_leading_slope(model, ga, family[tri13].graph), opts));
        out.alt_slopes.push_back(make_slope(family[alts[ai]].name + "_vs_tri24", "n", xs_n, m24,
                                            population_leading_slope(model, ga, family[tri24].graph), opts));
    }

    out.cross_mean.assign(static_cast<size_t>(ni_count), 0.0);
    out.cross_q05.assign(static_cast<size_t>(ni_count), 0.0);
    out.cross_q95.assign(static_cast<size_t>(ni_count), 0.0);
    std::vector<double> mc13(static_cast<size_t>(ni_count), 0.0), mc24(static_cast<size_t>(ni_count), 0.0);
    for (int ni = 0; ni < ni_count; ++ni) {
        std::vector<double> xs(static_cast<size_t>(opts.replicates));
        double acc = 0.0, a13 = 0.0, a24 = 0.0;
        for (int rep = 0; rep < opts.replicates; ++rep) {
            const Cell& cell = raw[static_cast<size_t>(rep)][static_cast<size_t>(ni)];
            xs[static_cast<size_t>(rep)] = cell.cross;
            acc += cell.cross;
            a13 += cell.complete13;
            a24 += cell.complete24;
        }
        out.cross_mean[static_cast<size_t>(ni)] = acc / opts.replicates;
        mc13[static_cast<size_t>(ni)] = a13 / opts.replicates;
        mc24[static_cast<size_t>(ni)] = a24 / opts.replicates;
        std::sort(xs.begin(), xs.end());
        out.cross_q05[static_cast<size_t>(ni)] = xs[static_cast<size_t>(0.05 * (opts.replicates - 1))];
        out.cross_q95[static_cast<size_t>(ni)] = xs[static_cast<size_t>(0.95 * (opts.replicates - 1))];
    }
    out.cross_slope = make_slope("tri24_vs_tri13", "n", xs_n, out.cross_mean, 0.0, opts);
    out.cross_band_width = *std::max_element(out.cross_mean.begin(), out.cross_mean.end()) -
                           *std::min_element(out.cross_mean.begin(), out.cross_mean.end());
    out.complete_slopes.push_back(make_slope("complete_vs_tri13", "log_n", xs_logn, mc13, -0.5, opts));
    out.complete_slopes.push_back(make_slope("complete_vs_tri24", "log_n", xs_logn, mc24, -0.5, opts));
    return out;
}

TailCheckReport tail_bound_check(double rho, int n, int replicates, const std::vector<double>& epsilon_grid,
                                 RngSeed seed, int threads) {
    if (!(std::abs(rho) < 1.0)) throw InvalidParams("|rho| must be below 1");
    if (n <= 2) throw InvalidParams("need n > 2");
    if (replicates < 1) throw InvalidParams("need at least one replicate");
    for (double eps : epsilon_grid)
        if (!(eps > 0.0 && eps < 1.0 - std::abs(rho))) throw InvalidEpsilon("epsilon must lie in (0, 1-|rho|)");

    const double root = std::sqrt(1.0 - rho * rho);
    std::vector<double> rho_hats(static_cast<size_t>(replicates));
    parallel_for(replicates, [&](int rep) {
        Rng rng(seed.with_stream(static_cast<std::uint64_t>(rep)));
        double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
        for (int i = 0; i < n; ++i) {
            const double z1 = rng.normal();
            const double z2 = rng.normal();
            const double x = z1;
            const double y = rho * z1 + root * z2;
            sx += x;
            sy += y;
            sxx += x * x;
            syy += y * y;
            sxy += x * y;
        }
        const double vx = sxx - sx * sx / n;
        const double vy = syy - sy * sy / n;
        const double cxy = sxy - sx * sy / n;
        rho_hats[static_cast<size_t>(rep)] = cxy / std::sqrt(vx * vy);
    }, threads);

    TailCheckReport report;
    report.rho = rho;
    report.n = n;
    report.replicates = replicates;
    report.epsilon_grid = epsilon_grid;
    for (double eps : epsilon_grid) {
        int count = 0;
        for (double r : rho_hats)
            if (std::abs(r - rho) > eps) ++count;
        const double phat = static_cast<double>(count) / replicates;
        const double bound = 21.0 / ((1.0 - std::abs(rho)) * (1.0 - std::abs(rho))) *
                             std::exp(-0.25 * n * eps * eps) / (eps * std::sqrt(static_cast<double>(n)));
        const double margin = 3.0 * std::sqrt(std::max(phat * (1.0 - phat), 1e-12) / replicates);
        report.empirical_tail.push_back(phat);
        report.theoretical_bound.push_back(bound);
        report.mc_margin.push_back(margin);
        if (phat > bound + margin) ++report.violations;
    }
    return report;
}

RateCheckReport exact_rate_check(int n, int d_s, int replicates, double epsilon, RngSeed seed, int threads) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw InvalidEpsilon("epsilon must lie in (0, 1/2)");
    if (n <= d_s + 3) throw InvalidParams("need n > d_s + 3");
    if (replicates < 1) throw InvalidParams("need at least one replicate");

    const int p = d_s + 2;
    VertexSet s;
    for (int v = 2; v < p; ++v) s.add(v);

    std::vector<double> rho_sq(static_cast<size_t>(replicates));
    parallel_for(replicates, [&](int rep) {
        Rng rng(seed.with_stream(static_cast<std::uint64_t>(rep)));
        Eigen::MatrixXd z(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < p; ++j) z(i, j) = rng.normal();
        const DataMatrix d(std::move(z));
        const double r = sample_partial_correlation(d, 0, 1, s);
        rho_sq[static_cast<size_t>(rep)] = r * r;
    }, threads);

    RateCheckReport report;
    report.n = n;
    report.d_s = d_s;
    report.replicates = replicates;
    report.epsilon = epsilon;
    report.m1 = (epsilon / (epsilon + 1.0)) * (epsilon / (epsilon + 1.0));
    report.m2 = 6.0 * std::log(5.0 / epsilon);

    const double lo = report.m1 / (n - d_s);
    const double hi = report.m2 / (n - d_s);
    int n_lo = 0, n_hi = 0;
    for (double r2 : rho_sq) {
        if (r2 < lo) ++n_lo;
        if (r2 > hi) ++n_hi;
    }
    report.freq_low = static_cast<double>(n_lo) / replicates;
    report.freq_high = static_cast<double>(n_hi) / replicates;
    const double worst = std::max(report.freq_low, report.freq_high);
    report.mc_margin = 3.0 * std::sqrt(std::max(worst * (1.0 - worst), 1e-12) / replicates);
    report.low_ok = report.freq_low < epsilon + report.mc_margin;
    report.high_ok = report.freq_high < epsilon + report.mc_margin;

    const double a = 0.5, b = 0.5 * (n - d_s - 2);
    std::vector<double> sorted = rho_sq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> cdf(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) cdf[i] = beta_cdf(sorted[i], a, b);
    report.ks_beta = ks_distance(rho_sq, cdf);
    return report;
}

}  // namespace ggm
