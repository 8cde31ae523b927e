#include "acttend/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "acttend/errors.hpp"
#include "acttend/hopkins.hpp"
#include "acttend/log.hpp"
#include "acttend/pca.hpp"
#include "acttend/mix.hpp"
#include "acttend/rng.hpp"
#include "acttend/silhouette.hpp"

namespace acttend {

namespace {

constexpr std::uint64_t kLshSeedSalt = 0x15f;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

GraphRep dataset_to_graph(const Dataset& ds, const GraphConfig& gc) {
    Dataset sd = standardize(ds);
    LshConfig lsh = gc.lsh;
    lsh.seed = derive_seed(ds.seed, kLshSeedSalt);
    return build_graph(sd, lsh, gc.strategy, gc.neighbor_pct);
}

std::vector<double> threshold_grid(double lo, double hi, double step) {
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        double t = lo + i * step;
        if (t > hi + step / 2) break;
        grid.push_back(t);
    }
    return grid;
}

// ---------------------------------------------------------------------------
// dimension sweep

std::vector<MetricCell> run_single_dimension(const DimSweepConfig& cfg, int dim,
                                             std::uint64_t dim_seed) {
    log_info("dimension sweep: dim=%d (train %d, test %d)", dim, cfg.n_train, cfg.n_test);

    CorpusConfig cc;
    cc.n_datasets = cfg.n_train;
    cc.dims = {dim};
    cc.tpl = cfg.tpl;
    cc.std_frac_min = cfg.std_frac_min;
    cc.std_frac_max = cfg.std_frac_max;
    cc.master_seed = derive_seed(dim_seed, 1);
    std::vector<Dataset> train_data = gen_corpus(cc);

    const int n_train = static_cast<int>(train_data.size());
    std::vector<std::pair<GraphRep, bool>> train_graphs(static_cast<std::size_t>(n_train));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_train; ++i) {
        Dataset& ds = train_data[static_cast<std::size_t>(i)];
        train_graphs[static_cast<std::size_t>(i)] = {dataset_to_graph(ds, cfg.graph), *ds.label};
        ds.points = Matrix();  // points are no longer needed; keep the peak down
    }
    train_data.clear();

    TrainConfig tc = cfg.train_cfg;
    tc.seed = derive_seed(dim_seed, 2);
    auto [model, train_log] = train(train_graphs, tc);
    log_info("dim=%d trained: final loss %.4f, train acc %.3f", dim,
             train_log.epoch_loss.back(), train_log.epoch_acc.back());
    train_graphs.clear();
    train_graphs.shrink_to_fit();

    cc.n_datasets = cfg.n_test;
    cc.master_seed = derive_seed(dim_seed, 3);
    std::vector<Dataset> test_data = gen_corpus(cc);
    const int n_test = static_cast<int>(test_data.size());

    std::vector<bool> labels(static_cast<std::size_t>(n_test));
    std::vector<double> gnn_prob(static_cast<std::size_t>(n_test));
    std::vector<double> hop_score(static_cast<std::size_t>(n_test));
    std::vector<double> sil_score(static_cast<std::size_t>(n_test));
    const std::uint64_t hop_seed = derive_seed(dim_seed, 4);
    const std::uint64_t sil_seed = derive_seed(dim_seed, 5);

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_test; ++i) {
        const Dataset& ds = test_data[static_cast<std::size_t>(i)];
        labels[static_cast<std::size_t>(i)] = *ds.label;
        GraphRep g = dataset_to_graph(ds, cfg.graph);
        gnn_prob[static_cast<std::size_t>(i)] = gcn_forward(g, model);
        Matrix std_points = standardize_points(ds.points);
        hop_score[static_cast<std::size_t>(i)] =
            hopkins_statistic(std_points, -1, derive_seed(hop_seed, static_cast<std::uint64_t>(i))).score;
        sil_score[static_cast<std::size_t>(i)] =
            silhouette_best(std_points, cfg.k_max_cap, derive_seed(sil_seed, static_cast<std::uint64_t>(i))).score;
    }

    std::vector<MetricCell> cells;
    auto add_cell = [&](const std::string& method, double threshold, const std::vector<double>& scores) {
        std::vector<bool> pred(static_cast<std::size_t>(n_test));
        for (int i = 0; i < n_test; ++i)
            pred[static_cast<std::size_t>(i)] = scores[static_cast<std::size_t>(i)] >= threshold;
        cells.push_back({method, dim, threshold, compute_metrics(pred, labels), dim_seed});
    };
    add_cell("gnn", 0.5, gnn_prob);
    for (double t : cfg.thresholds_hopkins) add_cell("hopkins", t, hop_score);
    for (double t : cfg.thresholds_silhouette) add_cell("silhouette", t, sil_score);
    return cells;
}

DimSweepReport run_dimension_sweep(const DimSweepConfig& cfg) {
    DimSweepReport report;
    report.config_json = config_to_json(cfg);
    for (int dim : cfg.dims) {
        auto cells = run_single_dimension(cfg, dim, derive_seed(cfg.master_seed, static_cast<std::uint64_t>(dim)));
        report.cells.insert(report.cells.end(), cells.begin(), cells.end());
    }
    return report;
}

// ---------------------------------------------------------------------------
// image mixing experiment

MnistReport run_mnist_experiment(const MnistConfig& cfg, const IdxData& data,
                                 const ModelParams& model) {
    if (data.images.rows() < cfg.n_structured)
        throw InputError("image corpus has " + std::to_string(data.images.rows()) +
                         " images, need at least " + std::to_string(cfg.n_structured));

    const int n_images = data.images.rows();
    const int n_fit = cfg.pca_subsample > 0 ? std::min(cfg.pca_subsample, n_images) : n_images;
    Matrix fit_slice(n_fit, data.images.cols());
    for (int i = 0; i < n_fit; ++i)
        for (int j = 0; j < data.images.cols(); ++j) fit_slice(i, j) = data.images(i, j);
    log_info("fitting pca on %d images -> %d dims", n_fit, cfg.pca_dims);
    PcaModel pca = pca_fit(fit_slice, cfg.pca_dims);
    fit_slice = Matrix();
    Matrix projected = pca_transform(pca, data.images);

    struct Task {
        int seed_idx;
        int variant;
        int p_idx;
    };
    std::vector<Task> tasks;
    for (int s = 0; s < cfg.n_seeds; ++s)
        for (int variant : cfg.variants)
            for (int pi = 0; pi < static_cast<int>(cfg.p_grid.size()); ++pi)
                tasks.push_back({s, variant, pi});

    // Structured/noise pools per master-seed stream.
    std::vector<Matrix> structured_pools(static_cast<std::size_t>(cfg.n_seeds));
    std::vector<Matrix> noise_pools(static_cast<std::size_t>(cfg.n_seeds));
    for (int s = 0; s < cfg.n_seeds; ++s) {
        const std::uint64_t seed_s = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(s));
        Rng rng(derive_seed(seed_s, 1));
        std::vector<int> ids = rng.sample_without_replacement(projected.rows(), cfg.n_structured);
        Matrix pool(cfg.n_structured, projected.cols());
        for (int i = 0; i < cfg.n_structured; ++i)
            for (int j = 0; j < projected.cols(); ++j)
                pool(i, j) = projected(ids[static_cast<std::size_t>(i)], j);
        noise_pools[static_cast<std::size_t>(s)] =
            make_noise_like(pool, cfg.n_noise, derive_seed(seed_s, 2));
        structured_pools[static_cast<std::size_t>(s)] = std::move(pool);
    }

    const int cells_per_task = 1 + static_cast<int>(cfg.thresholds_hopkins.size()) +
                               static_cast<int>(cfg.thresholds_silhouette.size());
    MnistReport report;
    report.config_json = config_to_json(cfg);
    report.cells.resize(tasks.size() * static_cast<std::size_t>(cells_per_task));

    const std::int64_t n_tasks = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < n_tasks; ++t) {
        const Task& task = tasks[static_cast<std::size_t>(t)];
        const std::uint64_t seed_s = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(task.seed_idx));
        const double p = cfg.p_grid[static_cast<std::size_t>(task.p_idx)];

        MixSpec ms;
        ms.variant = task.variant == 1 ? MixVariant::AddToNoise : MixVariant::FixedBudget;
        ms.p_percent = p;
        ms.n_structured_pool = cfg.n_structured;
        ms.n_noise_base = cfg.n_noise;
        ms.seed = derive_seed(seed_s, 1000 + static_cast<std::uint64_t>(task.variant) * 256 +
                                          static_cast<std::uint64_t>(task.p_idx));
        Dataset mixed = mix(structured_pools[static_cast<std::size_t>(task.seed_idx)],
                            noise_pools[static_cast<std::size_t>(task.seed_idx)], ms);

        GraphRep g = dataset_to_graph(mixed, cfg.graph);
        const double prob = gcn_forward(g, model);
        Matrix std_points = standardize_points(mixed.points);
        const double hop = hopkins_statistic(std_points, -1, derive_seed(ms.seed, 11)).score;
        const double sil = silhouette_best(std_points, cfg.k_max_cap, derive_seed(ms.seed, 12)).score;

        MnistCell* out = report.cells.data() + t * cells_per_task;
        *out++ = {task.variant, p, "gnn", 0.5, prob, prob >= 0.5, seed_s};
        for (double th : cfg.thresholds_hopkins)
            *out++ = {task.variant, p, "hopkins", th, hop, hop >= th, seed_s};
        for (double th : cfg.thresholds_silhouette)
            *out++ = {task.variant, p, "silhouette", th, sil, sil >= th, seed_s};
    }

    // Onsets per (seed stream, variant, method, threshold), over ascending p.
    std::vector<double> sorted_p = cfg.p_grid;
    std::sort(sorted_p.begin(), sorted_p.end());
    std::map<std::tuple<std::uint64_t, int, std::string, double>, std::map<double, bool>> series;
    for (const MnistCell& c : report.cells)
        series[{c.seed, c.variant, c.method, c.threshold}][c.p] = c.decision;
    for (const auto& [key, by_p] : series) {
        OnsetRow row;
        row.seed = std::get<0>(key);
        row.variant = std::get<1>(key);
        row.method = std::get<2>(key);
        row.threshold = std::get<3>(key);
        double onset = -1.0;
        for (auto it = by_p.rbegin(); it != by_p.rend(); ++it) {
            if (it->second)
                onset = it->first;
            else
                break;  // positives must persist through the top of the grid
        }
        row.onset_p = onset;
        for (const auto& [p, dec] : by_p)
            if (dec) {
                row.first_positive_p = p;
                break;
            }
        row.stable = row.first_positive_p < 0 || row.onset_p == row.first_positive_p;
        report.onsets.push_back(row);
    }
    return report;
}

MnistReport run_mnist_experiment(const MnistConfig& cfg, const ModelParams& model) {
    IdxData data = load_idx(cfg.images_path, cfg.labels_path);
    return run_mnist_experiment(cfg, data, model);
}

// ---------------------------------------------------------------------------
// grid search

GridCell run_grid_cell(const GridSearchConfig& cfg, const EdgeStrategy& strategy, double pct,
                       std::uint64_t cell_seed) {
    CorpusConfig cc;
    cc.n_datasets = cfg.n_train;
    cc.dims = {cfg.tpl.dim};
    cc.tpl = cfg.tpl;
    cc.std_frac_min = cfg.std_frac_min;
    cc.std_frac_max = cfg.std_frac_max;
    cc.master_seed = derive_seed(cell_seed, 1);
    std::vector<Dataset> train_data = gen_corpus(cc);

    GraphConfig gc;
    gc.lsh = cfg.lsh;
    gc.strategy = strategy;
    gc.neighbor_pct = pct;

    const int n_train = static_cast<int>(train_data.size());
    std::vector<std::pair<GraphRep, bool>> train_graphs(static_cast<std::size_t>(n_train));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_train; ++i)
        train_graphs[static_cast<std::size_t>(i)] = {
            dataset_to_graph(train_data[static_cast<std::size_t>(i)], gc),
            *train_data[static_cast<std::size_t>(i)].label};
    train_data.clear();

    TrainConfig tc = cfg.train_cfg;
    tc.seed = derive_seed(cell_seed, 3);
    auto [model, train_log] = train(train_graphs, tc);
    train_graphs.clear();
    train_graphs.shrink_to_fit();

    cc.n_datasets = cfg.n_test;
    cc.master_seed = derive_seed(cell_seed, 2);
    std::vector<Dataset> test_data = gen_corpus(cc);
    const int n_test = static_cast<int>(test_data.size());
    std::vector<bool> pred(static_cast<std::size_t>(n_test)), labels(static_cast<std::size_t>(n_test));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_test; ++i) {
        const Dataset& ds = test_data[static_cast<std::size_t>(i)];
        GraphRep g = dataset_to_graph(ds, gc);
        pred[static_cast<std::size_t>(i)] = gcn_forward(g, model) >= 0.5;
        labels[static_cast<std::size_t>(i)] = *ds.label;
    }

    GridCell cell;
    cell.strategy = strategy.name();
    cell.pct = pct;
    cell.accuracy = compute_metrics(pred, labels).accuracy;
    cell.seed = cell_seed;
    return cell;
}

GridReport run_grid_search(const GridSearchConfig& cfg) {
    GridReport report;
    report.config_json = config_to_json(cfg);
    const std::uint64_t grid_seed = derive_seed(cfg.master_seed, 0xCE11);
    for (const EdgeStrategy& strategy : cfg.strategies) {
        for (double pct : cfg.pcts) {
            report.cells.push_back(run_grid_cell(cfg, strategy, pct, grid_seed));
            log_info("grid cell %s @ %.0f%%: accuracy %.3f", report.cells.back().strategy.c_str(),
                     pct * 100, report.cells.back().accuracy);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// config echoes

namespace {

nlohmann::json to_json(const GenConfig& g) {
    return {{"n_min", g.n_min},   {"n_max", g.n_max},
            {"dim", g.dim},       {"k_min", g.k_min},
            {"k_max", g.k_max},   {"cluster_std", g.cluster_std},
            {"box_halfwidth", g.box_halfwidth}, {"seed", g.seed}};
}

nlohmann::json to_json(const LshConfig& l) {
    return {{"n_tables", l.n_tables},
            {"n_bits", l.n_bits},
            {"neighbor_pct", l.neighbor_pct},
            {"neighbor_cap", l.neighbor_cap},
            {"seed", l.seed}};
}

nlohmann::json to_json(const GraphConfig& g) {
    return {{"lsh", to_json(g.lsh)},
            {"strategy", g.strategy.name()},
            {"neighbor_pct", g.neighbor_pct}};
}

nlohmann::json to_json(const TrainConfig& t) {
    return {{"hidden_dim", t.hidden_dim},   {"learning_rate", t.learning_rate},
            {"epochs", t.epochs},           {"batch_size", t.batch_size},
            {"adam_beta1", t.adam_beta1},   {"adam_beta2", t.adam_beta2},
            {"adam_eps", t.adam_eps},       {"seed", t.seed}};
}

}  // namespace

std::string config_to_json(const DimSweepConfig& cfg) {
    nlohmann::json j{{"kind", "dimension_sweep"},
                     {"dims", cfg.dims},
                     {"n_train", cfg.n_train},
                     {"n_test", cfg.n_test},
                     {"template", to_json(cfg.tpl)},
                     {"std_frac_min", cfg.std_frac_min},
                     {"std_frac_max", cfg.std_frac_max},
                     {"graph", to_json(cfg.graph)},
                     {"train", to_json(cfg.train_cfg)},
                     {"thresholds_hopkins", cfg.thresholds_hopkins},
                     {"thresholds_silhouette", cfg.thresholds_silhouette},
                     {"k_max_cap", cfg.k_max_cap},
                     {"master_seed", cfg.master_seed}};
    return j.dump();
}

std::string config_to_json(const MnistConfig& cfg) {
    nlohmann::json j{{"kind", "mnist_mix"},
                     {"images_path", cfg.images_path},
                     {"labels_path", cfg.labels_path},
                     {"pca_dims", cfg.pca_dims},
                     {"pca_subsample", cfg.pca_subsample},
                     {"n_structured", cfg.n_structured},
                     {"n_noise", cfg.n_noise},
                     {"p_grid", cfg.p_grid},
                     {"variants", cfg.variants},
                     {"graph", to_json(cfg.graph)},
                     {"thresholds_hopkins", cfg.thresholds_hopkins},
                     {"thresholds_silhouette", cfg.thresholds_silhouette},
                     {"k_max_cap", cfg.k_max_cap},
                     {"n_seeds", cfg.n_seeds},
                     {"master_seed", cfg.master_seed}};
    return j.dump();
}

std::string config_to_json(const GridSearchConfig& cfg) {
    std::vector<std::string> strategy_names;
    for (const auto& s : cfg.strategies) strategy_names.push_back(s.name());
    nlohmann::json j{{"kind", "grid_search"},
                     {"strategies", strategy_names},
                     {"pcts", cfg.pcts},
                     {"n_train", cfg.n_train},
                     {"n_test", cfg.n_test},
                     {"template", to_json(cfg.tpl)},
                     {"std_frac_min", cfg.std_frac_min},
                     {"std_frac_max", cfg.std_frac_max},
                     {"lsh", to_json(cfg.lsh)},
                     {"train", to_json(cfg.train_cfg)},
                     {"k_max_cap", cfg.k_max_cap},
                     {"master_seed", cfg.master_seed}};
    return j.dump();
}

// ---------------------------------------------------------------------------
// writers

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    return f;
}

void write_metrics_row(std::ofstream& f, const MetricCell& c) {
    f << c.method << ',' << c.dim << ',' << fmt_double(c.threshold) << ',' << c.metrics.tp << ','
      << c.metrics.fp << ',' << c.metrics.fn << ',' << c.metrics.tn << ','
      << fmt_double(c.metrics.accuracy) << ',' << fmt_double(c.metrics.precision) << ','
      << fmt_double(c.metrics.recall) << ',' << fmt_double(c.metrics.f1) << ',' << c.seed << '\n';
}

nlohmann::json metrics_json(const Metrics& m) {
    return {{"tp", m.tp},           {"fp", m.fp},
            {"fn", m.fn},           {"tn", m.tn},
            {"accuracy", m.accuracy}, {"precision", m.precision},
            {"recall", m.recall},   {"f1", m.f1}};
}

}  // namespace

void write_dim_sweep_csv(const DimSweepReport& report, const std::string& path) {
    auto f = open_out(path);
    f << "# config " << report.config_json << '\n';
    f << "method,dim,threshold,tp,fp,fn,tn,accuracy,precision,recall,f1,seed\n";
    for (const auto& c : report.cells) write_metrics_row(f, c);
}

void write_dim_sweep_json(const DimSweepReport& report, const std::string& path) {
    nlohmann::json by_method;
    for (const auto& c : report.cells) {
        nlohmann::json cell = metrics_json(c.metrics);
        cell["threshold"] = c.threshold;
        cell["seed"] = c.seed;
        by_method[c.method][std::to_string(c.dim)].push_back(cell);
    }
    nlohmann::json j{{"config", nlohmann::json::parse(report.config_json)}, {"results", by_method}};
    auto f = open_out(path);
    f << j.dump(2) << '\n';
}

void write_mnist_csv(const MnistReport& report, const std::string& cells_path,
                     const std::string& onsets_path) {
    {
        auto f = open_out(cells_path);
        f << "# config " << report.config_json << '\n';
        f << "variant,p,method,threshold,score,decision,seed\n";
        for (const auto& c : report.cells)
            f << c.variant << ',' << fmt_double(c.p) << ',' << c.method << ','
              << fmt_double(c.threshold) << ',' << fmt_double(c.score) << ',' << (c.decision ? 1 : 0)
              << ',' << c.seed << '\n';
    }
    {
        auto f = open_out(onsets_path);
        f << "# config " << report.config_json << '\n';
        f << "variant,method,threshold,seed,onset_p,stable,first_positive_p\n";
        for (const auto& o : report.onsets)
            f << o.variant << ',' << o.method << ',' << fmt_double(o.threshold) << ',' << o.seed
              << ',' << fmt_double(o.onset_p) << ',' << (o.stable ? 1 : 0) << ','
              << fmt_double(o.first_positive_p) << '\n';
    }
}

void write_mnist_json(const MnistReport& report, const std::string& path) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : report.cells)
        cells.push_back({{"variant", c.variant},
                         {"p", c.p},
                         {"method", c.method},
                         {"threshold", c.threshold},
                         {"score", c.score},
                         {"decision", c.decision},
                         {"seed", c.seed}});
    nlohmann::json onsets = nlohmann::json::array();
    for (const auto& o : report.onsets)
        onsets.push_back({{"variant", o.variant},
                          {"method", o.method},
                          {"threshold", o.threshold},
                          {"seed", o.seed},
                          {"onset_p", o.onset_p},
                          {"stable", o.stable},
                          {"first_positive_p", o.first_positive_p}});
    nlohmann::json j{{"config", nlohmann::json::parse(report.config_json)},
                     {"cells", cells},
                     {"onsets", onsets}};
    auto f = open_out(path);
    f << j.dump(2) << '\n';
}

void write_grid_csv(const GridReport& report, const std::string& path) {
    auto f = open_out(path);
    f << "# config " << report.config_json << '\n';
    f << "strategy,pct,accuracy,seed\n";
    for (const auto& c : report.cells)
        f << c.strategy << ',' << fmt_double(c.pct) << ',' << fmt_double(c.accuracy) << ',' << c.seed
          << '\n';
}

void write_grid_heatmap_csv(const GridReport& report, const std::string& path) {
    std::vector<std::string> strategies;
    std::vector<double> pcts;
    for (const auto& c : report.cells) {
        if (std::find(strategies.begin(), strategies.end(), c.strategy) == strategies.end())
            strategies.push_back(c.strategy);
        if (std::find(pcts.begin(), pcts.end(), c.pct) == pcts.end()) pcts.push_back(c.pct);
    }
    std::sort(pcts.begin(), pcts.end());

    auto f = open_out(path);
    f << "# config " << report.config_json << '\n';
    f << "strategy";
    for (double p : pcts) f << ',' << fmt_double(p);
    f << '\n';
    for (const auto& s : strategies) {
        f << s;
        for (double p : pcts) {
            for (const auto& c : report.cells)
                if (c.strategy == s && c.pct == p) {
                    f << ',' << fmt_double(c.accuracy);
                    break;
                }
        }
        f << '\n';
    }
}

void write_grid_json(const GridReport& report, const std::string& path) {
    nlohmann::json by_strategy;
    for (const auto& c : report.cells)
        by_strategy[c.strategy].push_back(
            {{"pct", c.pct}, {"accuracy", c.accuracy}, {"seed", c.seed}});
    nlohmann::json j{{"config", nlohmann::json::parse(report.config_json)}, {"results", by_strategy}};
    auto f = open_out(path);
    f << j.dump(2) << '\n';
}

}  // namespace acttend
