#include "acttend/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "acttend/errors.hpp"

namespace acttend {

std::string EdgeStrategy::name() const {
    switch (kind) {
        case EdgeKind::Unweighted: return "unweighted";
        case EdgeKind::Euclidean: return "euclidean";
        case EdgeKind::Cosine: return "cosine";
        case EdgeKind::Rbf: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "rbf_sigma%g", sigma);
            return buf;
        }
    }
    return "?";
}

void validate(const EdgeStrategy& strategy) {
    if (strategy.kind == EdgeKind::Rbf && !(strategy.sigma > 0.0))
        throw ConfigError("rbf strategy requires sigma > 0");
}

EdgeStrategy edge_strategy_from_name(const std::string& name) {
    if (name == "unweighted") return EdgeStrategy::unweighted();
    if (name == "euclidean") return EdgeStrategy::euclidean();
    if (name == "cosine") return EdgeStrategy::cosine();
    if (name.rfind("rbf_sigma", 0) == 0) {
        double sigma = std::stod(name.substr(9));
        return EdgeStrategy::rbf(sigma);
    }
    throw ConfigError("unknown edge strategy '" + name + "'");
}

void validate(const GraphRep& g) {
    if (g.node_features.rows() != g.n_nodes || g.node_features.cols() != 3)
        throw StructuralError("node_features must be n x 3");
    if (g.edges.size() != g.weights.size())
        throw StructuralError("edges and weights are misaligned");
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [i, j] = g.edges[e];
        if (i == j) throw StructuralError("self-edge at node " + std::to_string(i));
        if (i > j) throw StructuralError("edge pair not normalized: (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
        if (i < 0 || j >= g.n_nodes) throw StructuralError("edge endpoint out of range");
        if (e > 0 && g.edges[e - 1] == g.edges[e])
            throw StructuralError("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
        double w = g.weights[e];
        if (!std::isfinite(w)) throw StructuralError("non-finite edge weight");
        switch (g.strategy.kind) {
            case EdgeKind::Unweighted:
                if (w != 1.0) throw StructuralError("unweighted edge with weight != 1");
                break;
            case EdgeKind::Euclidean:
                if (w < 0.0) throw StructuralError("negative euclidean weight");
                break;
            case EdgeKind::Cosine:
                if (w < -1.0 - 1e-12 || w > 1.0 + 1e-12)
                    throw StructuralError("cosine weight outside [-1,1]");
                break;
            case EdgeKind::Rbf:
                if (w < 0.0 || w > 1.0) throw StructuralError("rbf weight outside [0,1]");
                break;
        }
    }
    for (double v : g.node_features.values())
        if (!std::isfinite(v)) throw StructuralError("non-finite node feature");
}

std::vector<std::pair<int, int>> knn_edges(const Matrix& points, double neighbor_pct) {
    const int n = points.rows();
    if (n < 2) throw InputError("knn_edges needs at least 2 points");
    if (!(neighbor_pct > 0.0) || neighbor_pct > 1.0)
        throw ConfigError("neighbor_pct must be in (0,1]");
    const int k = std::max(1, static_cast<int>(std::llround(neighbor_pct * (n - 1))));

    std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<double, int>> dists;
        dists.reserve(static_cast<std::size_t>(n) - 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            dists.emplace_back(sq_dist(points.row(i), points.row(j)), j);
        }
        std::partial_sort(dists.begin(), dists.begin() + k, dists.end());
        for (int t = 0; t < k; ++t) {
            int j = dists[static_cast<std::size_t>(t)].second;
            pairs[static_cast<std::size_t>(i) * k + t] = {std::min(i, j), std::max(i, j)};
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::vector<double> edge_weights(const Matrix& points,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const EdgeStrategy& strategy) {
    validate(strategy);
    const int n = points.rows();
    for (const auto& [i, j] : edges)
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");

    std::vector<double> norms;
    if (strategy.kind == EdgeKind::Cosine) {
        norms.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) norms[static_cast<std::size_t>(i)] = std::sqrt(dot(points.row(i), points.row(i)));
        for (const auto& [i, j] : edges) {
            if (norms[static_cast<std::size_t>(i)] == 0.0)
                throw DegenerateInputError("cosine weight undefined: node " + std::to_string(i) +
                                           " has zero norm");
            if (norms[static_cast<std::size_t>(j)] == 0.0)
                throw DegenerateInputError("cosine weight undefined: node " + std::to_string(j) +
                                           " has zero norm");
        }
    }

    std::vector<double> w(edges.size());
    const std::int64_t m = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t e = 0; e < m; ++e) {
        const auto [i, j] = edges[static_cast<std::size_t>(e)];
        switch (strategy.kind) {
            case EdgeKind::Unweighted:
                w[static_cast<std::size_t>(e)] = 1.0;
                break;
            case EdgeKind::Euclidean:
                w[static_cast<std::size_t>(e)] = std::sqrt(sq_dist(points.row(i), points.row(j)));
                break;
            case EdgeKind::Cosine:
                w[static_cast<std::size_t>(e)] = dot(points.row(i), points.row(j)) /
                                                 (norms[static_cast<std::size_t>(i)] * norms[static_cast<std::size_t>(j)]);
                break;
            case EdgeKind::Rbf:
                w[static_cast<std::size_t>(e)] =
                    std::exp(-sq_dist(points.row(i), points.row(j)) / (2.0 * strategy.sigma * strategy.sigma));
                break;
        }
    }
    return w;
}

GraphRep build_graph(const Dataset& ds, const LshConfig& lsh, const EdgeStrategy& strategy,
                     double neighbor_pct) {
    validate(ds);
    GraphRep g;
    g.n_nodes = ds.n();
    g.strategy = strategy;
    g.node_features = node_features(ds.points, lsh);
    g.edges = knn_edges(ds.points, neighbor_pct);
    g.weights = edge_weights(ds.points, g.edges, strategy);
    return g;
}

std::string graph_to_json(const GraphRep& g) {
    nlohmann::json j;
    j["n_nodes"] = g.n_nodes;
    j["node_features"] = g.node_features.values();  // row-major
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["weights"] = g.weights;
    j["strategy"] = g.strategy.name();
    return j.dump();
}

GraphRep graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("graph json: ") + e.what());
    }
    GraphRep g;
    g.n_nodes = j.at("n_nodes").get<int>();
    auto feats = j.at("node_features").get<std::vector<double>>();
    if (feats.size() != static_cast<std::size_t>(g.n_nodes) * 3)
        throw FormatError("graph json: node_features length mismatch");
    g.node_features = Matrix(g.n_nodes, 3, std::move(feats));
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    g.weights = j.at("weights").get<std::vector<double>>();
    g.strategy = edge_strategy_from_name(j.at("strategy").get<std::string>());
    validate(g);
    return g;
}

void save_graph(const GraphRep& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << graph_to_json(g) << '\n';
}

GraphRep load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return graph_from_json(text);
}

}  // namespace acttend
