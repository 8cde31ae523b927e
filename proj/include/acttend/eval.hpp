#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acttend/datagen.hpp"
#include "acttend/gcn.hpp"
#include "acttend/graph.hpp"
#include "acttend/idx.hpp"
#include "acttend/metrics.hpp"

namespace acttend {

// How a dataset becomes a graph. Datasets are standardized first; the LSH
// seed is derived from the dataset seed so the mapping is a pure function.
struct GraphConfig {
    LshConfig lsh;
    EdgeStrategy strategy = EdgeStrategy::rbf(2.0);
    double neighbor_pct = 0.6;
};

GraphRep dataset_to_graph(const Dataset& ds, const GraphConfig& gc);

std::vector<double> threshold_grid(double lo, double hi, double step);

// ---------------------------------------------------------------------------
// Dimension sweep: per dimension, train a fresh model on synthetic data and
// score all three detectors on a held-out balanced corpus.

struct DimSweepConfig {
    std::vector<int> dims = {2, 3, 5, 10, 20, 30, 50};
    int n_train = 2000;
    int n_test = 200;
    GenConfig tpl;
    double std_frac_min = 0.05;
    double std_frac_max = 0.5;
    GraphConfig graph;
    TrainConfig train_cfg;
    std::vector<double> thresholds_hopkins = threshold_grid(0.6, 0.9, 0.05);
    std::vector<double> thresholds_silhouette = threshold_grid(0.3, 0.75, 0.05);
    int k_max_cap = 20;
    std::uint64_t master_seed = 0;
};

struct MetricCell {
    std::string method;  // gnn | hopkins | silhouette
    int dim = 0;
    double threshold = 0.5;
    Metrics metrics;
    std::uint64_t seed = 0;  // dimension-level seed; the cell re-runs from it
};

struct DimSweepReport {
    std::vector<MetricCell> cells;
    std::string config_json;
};

// All cells of one dimension, reproducible from dim_seed alone.
std::vector<MetricCell> run_single_dimension(const DimSweepConfig& cfg, int dim,
                                             std::uint64_t dim_seed);
DimSweepReport run_dimension_sweep(const DimSweepConfig& cfg);

// ---------------------------------------------------------------------------
// Structured-data/noise mixing experiment on an image corpus.

struct MnistConfig {
    std::string images_path;
    std::string labels_path;
    int pca_dims = 50;
    int pca_subsample = 10000;  // images used to fit PCA (leading slice); 0 = all
    int n_structured = 200;
    int n_noise = 200;
    std::vector<double> p_grid = {0, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    std::vector<int> variants = {1, 2};
    GraphConfig graph;
    std::vector<double> thresholds_hopkins = threshold_grid(0.6, 0.9, 0.05);
    std::vector<double> thresholds_silhouette = threshold_grid(0.3, 0.75, 0.05);
    int k_max_cap = 20;
    int n_seeds = 10;
    std::uint64_t master_seed = 0;
};

struct MnistCell {
    int variant = 1;
    double p = 0.0;
    std::string method;
    double threshold = 0.5;
    double score = 0.0;
    bool decision = false;
    std::uint64_t seed = 0;  // per-master-seed stream
};

// Detection onset: smallest p whose decision is positive and stays positive
// for every larger p on the grid. onset_p = -1 when that never happens;
// first_positive_p records flickers.
struct OnsetRow {
    int variant = 1;
    std::string method;
    double threshold = 0.5;
    std::uint64_t seed = 0;
    double onset_p = -1.0;
    bool stable = true;
    double first_positive_p = -1.0;
};

struct MnistReport {
    std::vector<MnistCell> cells;
    std::vector<OnsetRow> onsets;
    std::string config_json;
};

MnistReport run_mnist_experiment(const MnistConfig& cfg, const IdxData& data,
                                 const ModelParams& model);
MnistReport run_mnist_experiment(const MnistConfig& cfg, const ModelParams& model);

// ---------------------------------------------------------------------------
// Grid search over edge strategies x neighbor percentages (fresh model per
// cell, shared corpora seeds across cells).

struct GridSearchConfig {
    std::vector<EdgeStrategy> strategies = {
        EdgeStrategy::unweighted(), EdgeStrategy::euclidean(), EdgeStrategy::cosine(),
        EdgeStrategy::rbf(0.5),     EdgeStrategy::rbf(1.0),    EdgeStrategy::rbf(2.0),
        EdgeStrategy::rbf(5.0),     EdgeStrategy::rbf(10.0)};
    std::vector<double> pcts = {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90, 0.99};
    int n_train = 400;
    int n_test = 200;
    GenConfig tpl;
    double std_frac_min = 0.15;
    double std_frac_max = 0.5;
    LshConfig lsh;
    TrainConfig train_cfg;
    int k_max_cap = 20;
    std::uint64_t master_seed = 0;
};

struct GridCell {
    std::string strategy;
    double pct = 0.0;
    double accuracy = 0.0;
    std::uint64_t seed = 0;
};

struct GridReport {
    std::vector<GridCell> cells;
    std::string config_json;
};

GridCell run_grid_cell(const GridSearchConfig& cfg, const EdgeStrategy& strategy, double pct,
                       std::uint64_t cell_seed);
GridReport run_grid_search(const GridSearchConfig& cfg);

// ---------------------------------------------------------------------------
// Report emission. CSV files start with one "# config ..." echo line; JSON
// reports embed the echo under "config".

void write_dim_sweep_csv(const DimSweepReport& report, const std::string& path);
void write_dim_sweep_json(const DimSweepReport& report, const std::string& path);
void write_mnist_csv(const MnistReport& report, const std::string& cells_path,
                     const std::string& onsets_path);
void write_mnist_json(const MnistReport& report, const std::string& path);
void write_grid_csv(const GridReport& report, const std::string& path);
void write_grid_heatmap_csv(const GridReport& report, const std::string& path);
void write_grid_json(const GridReport& report, const std::string& path);

std::string config_to_json(const DimSweepConfig& cfg);
std::string config_to_json(const MnistConfig& cfg);
std::string config_to_json(const GridSearchConfig& cfg);

}  // namespace acttend
