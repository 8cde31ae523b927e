#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "acttend/graph.hpp"
#include "acttend/kernels.hpp"
#include "acttend/matrix.hpp"

namespace acttend {

inline constexpr int kGcnLayers = 5;
inline constexpr int kNodeFeatureDim = 3;

/// Weights of the classifier: five graph-convolution layers (widths
/// 3 -> h -> h -> h -> h -> h), global mean pooling, then a linear head to a
/// single logit. feature_norm carries the training-corpus node-feature
/// standardization so inference is self-contained.
struct ModelParams {
    int hidden_dim = 32;
    std::vector<Matrix> gcn_w;               // kGcnLayers matrices
    std::vector<std::vector<double>> gcn_b;  // kGcnLayers vectors
    std::vector<double> fc_w;                // hidden_dim
    double fc_b = 0.0;
    std::array<double, kNodeFeatureDim> feat_mean{0, 0, 0};
    std::array<double, kNodeFeatureDim> feat_std{1, 1, 1};
    std::uint64_t train_seed = 0;

    bool operator==(const ModelParams& other) const = default;
};

// Zero-initialized parameters with the right shapes.
ModelParams zero_params(int hidden_dim);
void validate(const ModelParams& p);

struct TrainConfig {
    int hidden_dim = 32;
    double learning_rate = 1e-3;
    int epochs = 100;
    int batch_size = 16;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    std::uint64_t seed = 0;
};

void validate(const TrainConfig& cfg);

struct TrainLog {
    std::vector<double> epoch_loss;  // running mean training loss per epoch
    std::vector<double> epoch_acc;   // running training accuracy per epoch
    double val_accuracy = 0.0;
};

// Symmetric-normalized weighted adjacency with unit self-loops:
// S = D^{-1/2} (A_w + I) D^{-1/2}, D_ii = 1 + sum_j w_ij.
// Throws StructuralError if any D_ii <= 0 (possible only with cosine weights).
Csr normalized_adjacency(const GraphRep& g);

/// Probability that the graph's underlying dataset is clustered.
double gcn_forward(const GraphRep& g, const ModelParams& p);

// Clamped binary cross-entropy, p in [1e-7, 1 - 1e-7].
double bce_loss(double p, bool y);

struct Gradients {
    std::vector<Matrix> gcn_w;
    std::vector<std::vector<double>> gcn_b;
    std::vector<double> fc_w;
    double fc_b = 0.0;
};

// Exact reverse-mode gradients of bce_loss(gcn_forward(g), y) with respect to
// every parameter; also returns the forward probability.
std::pair<double, Gradients> backward(const GraphRep& g, const ModelParams& p, bool y);

// Adam on mini-batches; deterministic given cfg.seed (init, shuffle schedule,
// and a fixed gradient reduction order). Requires both classes present.
std::pair<ModelParams, TrainLog> train(const std::vector<std::pair<GraphRep, bool>>& corpus,
                                       const TrainConfig& cfg,
                                       const std::vector<std::pair<GraphRep, bool>>* val = nullptr);

// decision = probability >= threshold
std::pair<double, bool> predict(const GraphRep& g, const ModelParams& p, double threshold = 0.5);

// JSON checkpoint, round-trip exact.
void save_checkpoint(const ModelParams& p, const std::string& path);
ModelParams load_checkpoint(const std::string& path);

}  // namespace acttend
