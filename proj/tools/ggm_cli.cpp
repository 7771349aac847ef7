// Command-line front end: scoring, Bayes factors, posterior search,
// triangulation, enumeration, and the simulation studies. Batch only; every
// command writes its result to a file and prints a short summary.
//
// Exit codes: 0 success, 2 model/graph errors, 3 data errors, 4 budget
// errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggm/experiments.hpp"
#include "ggm/graph_io.hpp"
#include "ggm/mh.hpp"
#include "ggm/posterior.hpp"

using nlohmann::json;
using namespace ggm;

namespace {

struct RunConfig {
    std::string command;
    std::string sim_kind;  // for simulate
    std::string data_path;
    std::string graph_path;
    std::string graph_a_path;
    std::string graph_b_path;
    std::string out_path = "out.json";
    std::string out_dir = "out";
    bool no_center = false;

    double b = 3.0;
    double g = -1.0;  // -1: use 1/n
    double q = -1.0;  // -1: use 2/(p-1) (0.5 for p <= 3)
    std::string q_schedule_spec;  // "c_q,gamma"

    std::uint64_t seed = 0;
    std::uint64_t iters = 20000;
    int chains = 2;
    bool exhaustive = false;

    int p = 3;
    int max_fill = -1;

    std::string n_grid_spec = "100:3000:100";
    int replicates = 200;
    int threads = 0;
    double rho = 0.0;
    int n = 100;
    int d_s = 0;
    double epsilon = 0.1;
    std::string eps_grid_spec = "0.1,0.2,0.3,0.4,0.5";
};

json config_to_json(const RunConfig& c) {
    return json{{"command", c.command},
                {"sim_kind", c.sim_kind},
                {"data", c.data_path},
                {"graph", c.graph_path},
                {"graph_a", c.graph_a_path},
                {"graph_b", c.graph_b_path},
                {"out", c.out_path},
                {"out_dir", c.out_dir},
                {"no_center", c.no_center},
                {"b", c.b},
                {"g", c.g},
                {"q", c.q},
                {"q_schedule", c.q_schedule_spec},
                {"seed", c.seed},
                {"iters", c.iters},
                {"chains", c.chains},
                {"exhaustive", c.exhaustive},
                {"p", c.p},
                {"max_fill", c.max_fill},
                {"n_grid", c.n_grid_spec},
                {"replicates", c.replicates},
                {"threads", c.threads},
                {"rho", c.rho},
                {"n", c.n},
                {"d_s", c.d_s},
                {"epsilon", c.epsilon},
                {"eps_grid", c.eps_grid_spec}};
}

void config_from_json(const json& j, RunConfig& c) {
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("command", c.command);
    get("sim_kind", c.sim_kind);
    get("data", c.data_path);
    get("graph", c.graph_path);
    get("graph_a", c.graph_a_path);
    get("graph_b", c.graph_b_path);
    get("out", c.out_path);
    get("out_dir", c.out_dir);
    get("no_center", c.no_center);
    get("b", c.b);
    get("g", c.g);
    get("q", c.q);
    get("q_schedule", c.q_schedule_spec);
    get("seed", c.seed);
    get("iters", c.iters);
    get("chains", c.chains);
    get("exhaustive", c.exhaustive);
    get("p", c.p);
    get("max_fill", c.max_fill);
    get("n_grid", c.n_grid_spec);
    get("replicates", c.replicates);
    get("threads", c.threads);
    get("rho", c.rho);
    get("n", c.n);
    get("d_s", c.d_s);
    get("epsilon", c.epsilon);
    get("eps_grid", c.eps_grid_spec);
}

std::vector<int> parse_n_grid(const std::string& spec) {
    // "lo:hi:step" or comma-separated values
    std::vector<int> out;
    if (spec.find(':') != std::string::npos) {
        int lo, hi, step;
        char c1, c2;
        std::istringstream ss(spec);
        if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
            throw DataError("bad n-grid spec: " + spec);
        for (int n = lo; n <= hi; n += step) out.push_back(n);
        return out;
    }
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<double> parse_double_list(const std::string& spec) {
    std::vector<double> out;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

void require_path(const std::string& value, const char* flag) {
    // requiredness is checked after the config merge, so a --config file can
    // stand in for any flag
    if (value.empty()) throw DataError(std::string("missing required input: ") + flag);
}

ModelParams resolve_params(const RunConfig& cfg, const DataMatrix& d) {
    ModelParams mp;
    mp.b = cfg.b;
    mp.g = cfg.g > 0.0 ? cfg.g : 1.0 / d.n();
    if (!cfg.q_schedule_spec.empty()) {
        const auto parts = parse_double_list(cfg.q_schedule_spec);
        if (parts.size() != 2) throw DataError("q-schedule expects \"c_q,gamma\"");
        mp.q = q_schedule(d.n(), parts[0], parts[1]);
    } else if (cfg.q > 0.0) {
        mp.q = cfg.q;
    } else {
        mp.q = d.p() > 3 ? 2.0 / (d.p() - 1) : 0.5;
    }
    mp.validate();
    return mp;
}

json params_to_json(const ModelParams& mp, const DataMatrix& d, const RunConfig& cfg) {
    json j{{"b", mp.b}, {"q", mp.q}};
    if (cfg.g <= 0.0 && std::abs(mp.g * d.n() - 1.0) < 1e-13)
        j["g"] = "1/n";
    else
        j["g"] = mp.g;
    return j;
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write output file: " + path);
    out << j.dump(2) << "\n";
}

json slope_to_json(const SlopeReport& r) {
    return json{{"pair", r.pair},
                {"regressor", r.regressor},
                {"fitted_slope", r.fitted_slope},
                {"theoretical_slope", r.theoretical_slope},
                {"relative_error", r.relative_error},
                {"slope_se", r.slope_se},
                {"n_grid", r.n_grid},
                {"replicates", r.replicates}};
}

void write_mean_csv(const std::string& path, const std::vector<int>& n_grid,
                    const std::vector<std::string>& names, const std::vector<std::vector<double>>& cols) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write output file: " + path);
    out.precision(12);
    out << "n";
    for (const auto& name : names) out << "," << name;
    out << "\n";
    for (size_t ni = 0; ni < n_grid.size(); ++ni) {
        out << n_grid[ni];
        for (const auto& col : cols) out << "," << col[ni];
        out << "\n";
    }
}

void print_slope_table(std::ostream& os, const std::string& title, const std::vector<SlopeReport>& slopes) {
    os << title << "\n";
    os << "  pair                              regressor   theoretical      fitted        se\n";
    for (const auto& r : slopes) {
        os << "  " << r.pair;
        for (size_t k = r.pair.size(); k < 34; ++k) os << ' ';
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%-9s %12.4f %12.4f %9.5f", r.regressor.c_str(), r.theoretical_slope,
                      r.fitted_slope, r.slope_se);
        os << buf << "\n";
    }
}

int cmd_score(const RunConfig& cfg) {
    require_path(cfg.data_path, "--data");
    require_path(cfg.graph_path, "--graph");
    const DataMatrix d = DataMatrix::from_csv(cfg.data_path, !cfg.no_center);
    const Graph g = graph_from_json_file(cfg.graph_path);
    const ModelParams mp = resolve_params(cfg, d);
    if (!is_decomposable(g)) throw NotDecomposable();
    const GraphScore score = score_graph(d, g, mp);
    write_json(json{{"graph", graph_to_json(g)},
                    {"log_ml", score.log_ml},
                    {"log_prior", score.log_prior},
                    {"log_post", score.log_post},
                    {"params", params_to_json(mp, d, cfg)}},
               cfg.out_path);
    std::cout << "log_ml " << score.log_ml << "  log_prior " << score.log_prior << "  log_post " << score.log_post
              << "\nwrote " << cfg.out_path << "\n";
    return 0;
}

int cmd_bf(const RunConfig& cfg) {
    require_path(cfg.data_path, "--data");
    require_path(cfg.graph_a_path, "--graph-a");
    require_path(cfg.graph_b_path, "--graph-b");
    const DataMatrix d = DataMatrix::from_csv(cfg.data_path, !cfg.no_center);
    const Graph a = graph_from_json_file(cfg.graph_a_path);
    const Graph b = graph_from_json_file(cfg.graph_b_path);
    const ModelParams mp = resolve_params(cfg, d);
    if (!is_decomposable(a) || !is_decomposable(b)) throw NotDecomposable();

    const double log_bf = log_bayes_factor(d, a, b, mp);
    const double log_pr = log_posterior_ratio(d, a, b, mp);
    json out{{"graph_a", graph_to_json(a)},
             {"graph_b", graph_to_json(b)},
             {"log_bf", log_bf},
             {"log_pr", log_pr},
             {"params", params_to_json(mp, d, cfg)}};

    // one legal edge apart: attach the local move record
    const auto ea = a.edges();
    const auto eb = b.edges();
    std::vector<Edge> only_a, only_b;
    for (const Edge& e : ea)
        if (!b.has_edge(e.first, e.second)) only_a.push_back(e);
    for (const Edge& e : eb)
        if (!a.has_edge(e.first, e.second)) only_b.push_back(e);
    if (only_a.size() + only_b.size() == 1) {
        const bool adds = only_a.size() == 1;  // move b -> a
        const Edge e = adds ? only_a[0] : only_b[0];
        const LocalMove mv = local_log_bf(d, b, e, adds ? MoveKind::add : MoveKind::remove, mp);
        json sep = json::array();
        for (int v : mv.separator.to_vector()) sep.push_back(v + 1);
        out["local_move"] = json{{"edge", {e.first + 1, e.second + 1}},
                                 {"mode", adds ? "add" : "delete"},
                                 {"separator", sep},
                                 {"d_s", mv.d_s},
                                 {"rho_hat", mv.rho_hat},
                                 {"log_bf", mv.log_bf}};
    }
    write_json(out, cfg.out_path);
    std::cout << "log_bf " << log_bf << "  log_pr " << log_pr << "\nwrote " << cfg.out_path << "\n";
    return 0;
}

int cmd_search(const RunConfig& cfg) {
    require_path(cfg.data_path, "--data");
    const DataMatrix d = DataMatrix::from_csv(cfg.data_path, !cfg.no_center);
    const ModelParams mp = resolve_params(cfg, d);
    if (cfg.exhaustive) {
        if (d.p() > 6) throw TooLarge("exhaustive search is limited to 6 variables");
        const PosteriorTable table = exhaustive_posterior(d, mp);
        json entries = json::array();
        for (const auto& e : table.entries())
            entries.push_back(json{{"graph", graph_to_json(e.graph)}, {"log_post", e.log_post}, {"prob", e.prob}});
        write_json(json{{"entries", entries},
                        {"mode", graph_to_json(table.mode())},
                        {"mode_prob", table.mode_prob()},
                        {"params", params_to_json(mp, d, cfg)}},
                   cfg.out_path);
        std::cout << "exhaustive posterior over " << table.entries().size() << " graphs; mode prob "
                  << table.mode_prob() << "\nwrote " << cfg.out_path << "\n";
        return 0;
    }
    const ChainState best = mh_search_chains(d, mp, cfg.iters, cfg.chains, {cfg.seed, 0});
    write_json(json{{"best_graph", graph_to_json(best.best_seen)},
                    {"best_log_post", best.best_log_post},
                    {"iterations", best.iteration},
                    {"chains", cfg.chains},
                    {"acceptance_rate", static_cast<double>(best.acceptance_count) / best.iteration},
                    {"params", params_to_json(mp, d, cfg)},
                    {"seed", cfg.seed}},
               cfg.out_path);
    std::cout << "best log_post " << best.best_log_post << " after " << cfg.iters << " iters x " << cfg.chains
              << " chains\nwrote " << cfg.out_path << "\n";
    return 0;
}

int cmd_triangulate(const RunConfig& cfg) {
    require_path(cfg.graph_path, "--graph");
    const Graph g = graph_from_json_file(cfg.graph_path);
    TriangulationOptions opts;
    opts.max_fill = cfg.max_fill;
    const auto tris = minimal_triangulations(g, opts);
    json arr = json::array();
    for (const auto& t : tris) arr.push_back(triangulation_to_json(t));
    write_json(json{{"base", graph_to_json(g)}, {"triangulations", arr}}, cfg.out_path);
    std::cout << tris.size() << " minimal triangulation(s)\nwrote " << cfg.out_path << "\n";
    return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
    const auto graphs = enumerate_decomposable(cfg.p);
    json arr = json::array();
    for (const Graph& g : graphs) arr.push_back(graph_to_json(g));
    write_json(json{{"p", cfg.p}, {"count", graphs.size()}, {"graphs", arr}}, cfg.out_path);
    std::cout << graphs.size() << " decomposable graphs on " << cfg.p << " vertices\nwrote " << cfg.out_path << "\n";
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    const auto dir = std::filesystem::path(cfg.out_dir);

    if (cfg.sim_kind == "sim1" || cfg.sim_kind == "sim2") {
        SimOptions opts;
        opts.n_grid = parse_n_grid(cfg.n_grid_spec);
        opts.replicates = cfg.replicates;
        opts.b = cfg.b;
        opts.threads = cfg.threads;
        if (cfg.sim_kind == "sim1") {
            const Sim1Result res = sim1_slopes(opts, {cfg.seed, 0});
            write_mean_csv(dir / "sim1_means.csv", res.n_grid, res.names, res.mean_log_bf);
            json slopes = json::array();
            for (const auto& r : res.slopes) slopes.push_back(slope_to_json(r));
            write_json(json{{"slopes", slopes}, {"replicates", res.replicates}, {"seed", cfg.seed}},
                       dir / "sim1_slopes.json");
            std::ofstream txt(dir / "sim1_summary.txt");
            print_slope_table(txt, "log Bayes factor slopes against the generating path graph", res.slopes);
            print_slope_table(std::cout, "log Bayes factor slopes against the generating path graph", res.slopes);
        } else {
            const Sim2Result res = sim2_misspecification(opts, {cfg.seed, 0});
            std::vector<std::string> names;
            std::vector<std::vector<double>> cols;
            for (size_t a = 0; a < res.alt_names.size(); ++a) {
                names.push_back(res.alt_names[a] + "_vs_tri13");
                cols.push_back(res.mean_vs_tri13[a]);
                names.push_back(res.alt_names[a] + "_vs_tri24");
                cols.push_back(res.mean_vs_tri24[a]);
            }
            names.insert(names.end(), {"tri24_vs_tri13", "tri24_vs_tri13_q05", "tri24_vs_tri13_q95"});
            cols.push_back(res.cross_mean);
            cols.push_back(res.cross_q05);
            cols.push_back(res.cross_q95);
            write_mean_csv(dir / "sim2_means.csv", res.n_grid, names, cols);

            json slopes = json::array();
            for (const auto& r : res.alt_slopes) slopes.push_back(slope_to_json(r));
            slopes.push_back(slope_to_json(res.cross_slope));
            for (const auto& r : res.complete_slopes) slopes.push_back(slope_to_json(r));
            write_json(json{{"slopes", slopes},
                            {"cross_band_width", res.cross_band_width},
                            {"replicates", res.replicates},
                            {"seed", cfg.seed}},
                       dir / "sim2_slopes.json");
            std::ofstream txt(dir / "sim2_summary.txt");
            auto all = res.alt_slopes;
            all.push_back(res.cross_slope);
            all.insert(all.end(), res.complete_slopes.begin(), res.complete_slopes.end());
            print_slope_table(txt, "log Bayes factor slopes against the two triangulations", all);
            txt << "  band width of mean log BF(tri24;tri13): " << res.cross_band_width << " nats\n";
            print_slope_table(std::cout, "log Bayes factor slopes against the two triangulations", all);
            std::cout << "  band width of mean log BF(tri24;tri13): " << res.cross_band_width << " nats\n";
        }
        std::cout << "wrote " << cfg.out_dir << "\n";
        return 0;
    }

    if (cfg.sim_kind == "tailcheck") {
        const auto eps = parse_double_list(cfg.eps_grid_spec);
        const TailCheckReport rep = tail_bound_check(cfg.rho, cfg.n, cfg.replicates, eps, {cfg.seed, 0}, cfg.threads);
        json j{{"rho", rep.rho},         {"n", rep.n},
               {"replicates", rep.replicates}, {"epsilon_grid", rep.epsilon_grid},
               {"empirical_tail", rep.empirical_tail}, {"theoretical_bound", rep.theoretical_bound},
               {"mc_margin", rep.mc_margin},  {"violations", rep.violations}};
        write_json(j, dir / "tailcheck.json");
        std::cout << "violations: " << rep.violations << "\nwrote " << cfg.out_dir << "/tailcheck.json\n";
        return 0;
    }

    if (cfg.sim_kind == "ratecheck") {
        const RateCheckReport rep = exact_rate_check(cfg.n, cfg.d_s, cfg.replicates, cfg.epsilon, {cfg.seed, 0}, cfg.threads);
        json j{{"n", rep.n},
               {"d_s", rep.d_s},
               {"replicates", rep.replicates},
               {"epsilon", rep.epsilon},
               {"m1", rep.m1},
               {"m2", rep.m2},
               {"freq_low", rep.freq_low},
               {"freq_high", rep.freq_high},
               {"mc_margin", rep.mc_margin},
               {"low_ok", rep.low_ok},
               {"high_ok", rep.high_ok},
               {"ks_beta", rep.ks_beta}};
        write_json(j, dir / "ratecheck.json");
        std::cout << "freq_low " << rep.freq_low << " freq_high " << rep.freq_high << " ks " << rep.ks_beta
                  << "\nwrote " << cfg.out_dir << "/ratecheck.json\n";
        return 0;
    }

    throw DataError("unknown simulate kind: " + cfg.sim_kind);
}

int classify_and_report(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (dynamic_cast<const BudgetError*>(&e)) return 4;
    if (dynamic_cast<const DataError*>(&e)) return 3;
    if (dynamic_cast<const InvalidEpsilon*>(&e)) return 3;
    if (dynamic_cast<const Error*>(&e)) return 2;  // model/graph errors
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // a --config file supplies defaults for any flag; explicit flags win
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            std::ifstream in(argv[i + 1]);
            if (!in) {
                std::cerr << "error: cannot open config file " << argv[i + 1] << "\n";
                return 3;
            }
            try {
                json j;
                in >> j;
                config_from_json(j, cfg);
            } catch (const std::exception& e) {
                std::cerr << "error: bad config file: " << e.what() << "\n";
                return 3;
            }
        }
    }

    CLI::App app{"Bayesian structure learning for decomposable Gaussian graphical models"};
    app.option_defaults()->always_capture_default();
    std::string config_path, dump_config_path;
    app.add_option("--config", config_path, "JSON file supplying any flag");
    app.add_option("--dump-config", dump_config_path, "write the effective run configuration to this file");

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--b", cfg.b, "degrees of freedom (> 2)");
        sub->add_option("--g", cfg.g, "g-prior scale; omit for 1/n");
        sub->add_option("--q", cfg.q, "edge inclusion probability; omit for 2/(p-1)");
        sub->add_option("--q-schedule", cfg.q_schedule_spec, "c_q,gamma giving q = exp(-c_q n^gamma)");
        sub->add_flag("--no-center", cfg.no_center, "keep raw column means");
        sub->add_option("--seed", cfg.seed, "rng seed");
        sub->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    };

    CLI::App* score = app.add_subcommand("score", "log marginal likelihood and posterior score of a graph");
    score->fallthrough();
    score->add_option("--data", cfg.data_path, "csv data file");
    score->add_option("--graph", cfg.graph_path, "graph json file");
    score->add_option("--out", cfg.out_path, "output json");
    add_params(score);

    CLI::App* bf = app.add_subcommand("bf", "Bayes factor and posterior ratio between two graphs");
    bf->fallthrough();
    bf->add_option("--data", cfg.data_path);
    bf->add_option("--graph-a", cfg.graph_a_path);
    bf->add_option("--graph-b", cfg.graph_b_path);
    bf->add_option("--out", cfg.out_path);
    add_params(bf);

    CLI::App* search = app.add_subcommand("search", "posterior exploration of the decomposable graph space");
    search->fallthrough();
    search->add_option("--data", cfg.data_path);
    search->add_option("--iters", cfg.iters, "iterations per chain");
    search->add_option("--chains", cfg.chains, "independent chains");
    search->add_flag("--exhaustive", cfg.exhaustive, "enumerate the space (p <= 6)");
    search->add_option("--out", cfg.out_path);
    add_params(search);

    CLI::App* tri = app.add_subcommand("triangulate", "all minimal triangulations of a graph");
    tri->fallthrough();
    tri->add_option("--graph", cfg.graph_path);
    tri->add_option("--max-fill", cfg.max_fill, "largest fill-in size considered (-1: all)");
    tri->add_option("--out", cfg.out_path);

    CLI::App* enumerate = app.add_subcommand("enumerate", "all decomposable graphs on p vertices");
    enumerate->fallthrough();
    enumerate->add_option("--p", cfg.p, "vertex count (<= 6)");
    enumerate->add_option("--out", cfg.out_path);

    CLI::App* sim = app.add_subcommand("simulate", "simulation studies and distributional checks");
    sim->fallthrough();
    sim->require_subcommand(1);
    for (const char* kind : {"sim1", "sim2", "tailcheck", "ratecheck"}) {
        CLI::App* sub = sim->add_subcommand(kind);
        sub->fallthrough();
        sub->add_option("--n-grid", cfg.n_grid_spec, "lo:hi:step or comma list");
        sub->add_option("--replicates", cfg.replicates);
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--rho", cfg.rho, "population correlation (tailcheck)");
        sub->add_option("--n", cfg.n, "sample size (tailcheck/ratecheck)");
        sub->add_option("--d-s", cfg.d_s, "conditioning set size (ratecheck)");
        sub->add_option("--epsilon", cfg.epsilon, "rate-check epsilon in (0, 1/2)");
        sub->add_option("--eps-grid", cfg.eps_grid_spec, "comma list of tail epsilons");
        add_params(sub);
    }

    app.require_subcommand(0, 1);
    CLI11_PARSE(app, argc, argv);

    try {
        for (CLI::App* sub : app.get_subcommands()) {
            cfg.command = sub->get_name();
            if (cfg.command == "simulate") cfg.sim_kind = sub->get_subcommands().at(0)->get_name();
        }
        if (!dump_config_path.empty()) write_json(config_to_json(cfg), dump_config_path);
        if (cfg.command.empty()) {
            std::cerr << app.help();
            return 0;
        }
        if (cfg.command == "score") return cmd_score(cfg);
        if (cfg.command == "bf") return cmd_bf(cfg);
        if (cfg.command == "search") return cmd_search(cfg);
        if (cfg.command == "triangulate") return cmd_triangulate(cfg);
        if (cfg.command == "enumerate") return cmd_enumerate(cfg);
        if (cfg.command == "simulate") return cmd_simulate(cfg);
        std::cerr << "error: unknown command " << cfg.command << "\n";
        return 3;
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }
}
