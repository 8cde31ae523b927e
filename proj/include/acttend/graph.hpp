#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acttend/dataset.hpp"
#include "acttend/lsh.hpp"
#include "acttend/matrix.hpp"

namespace acttend {

enum class EdgeKind { Unweighted, Euclidean, Cosine, Rbf };

struct EdgeStrategy {
    EdgeKind kind = EdgeKind::Rbf;
    double sigma = 2.0;  // Rbf only

    static EdgeStrategy unweighted() { return {EdgeKind::Unweighted, 0.0}; }
    static EdgeStrategy euclidean() { return {EdgeKind::Euclidean, 0.0}; }
    static EdgeStrategy cosine() { return {EdgeKind::Cosine, 0.0}; }
    static EdgeStrategy rbf(double sigma) { return {EdgeKind::Rbf, sigma}; }

    std::string name() const;
};

void validate(const EdgeStrategy& strategy);
EdgeStrategy edge_strategy_from_name(const std::string& name);

/// Graph view of a dataset: one node per point, LSH summary node features,
/// symmetrized KNN edges with strategy-dependent weights.
struct GraphRep {
    int n_nodes = 0;
    Matrix node_features;                    // n x 3
    std::vector<std::pair<int, int>> edges;  // i < j, sorted lexicographically
    std::vector<double> weights;             // aligned with edges
    EdgeStrategy strategy;
};

// Throws StructuralError on any violated invariant (self-edges, duplicates,
// out-of-range weights, non-finite values).
void validate(const GraphRep& g);

// Exact K-nearest-neighbor edges, K = max(1, round(pct * (n-1))), distance
// ties broken by lower index, symmetrized to undirected pairs.
std::vector<std::pair<int, int>> knn_edges(const Matrix& points, double neighbor_pct);

std::vector<double> edge_weights(const Matrix& points,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const EdgeStrategy& strategy);

GraphRep build_graph(const Dataset& ds, const LshConfig& lsh, const EdgeStrategy& strategy,
                     double neighbor_pct);

// Debug/golden-test serialization.
std::string graph_to_json(const GraphRep& g);
GraphRep graph_from_json(const std::string& text);
void save_graph(const GraphRep& g, const std::string& path);
GraphRep load_graph(const std::string& path);

}  // namespace acttend
