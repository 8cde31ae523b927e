#include "acttend/gcn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <span>

#include <json.hpp>

#include "acttend/errors.hpp"
#include "acttend/rng.hpp"

namespace acttend {

namespace {

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

constexpr double kBceClamp = 1e-7;

}  // namespace

ModelParams zero_params(int hidden_dim) {
    ModelParams p;
    p.hidden_dim = hidden_dim;
    p.gcn_w.reserve(kGcnLayers);
    for (int l = 0; l < kGcnLayers; ++l) {
        const int in = l == 0 ? kNodeFeatureDim : hidden_dim;
        p.gcn_w.emplace_back(in, hidden_dim);
        p.gcn_b.emplace_back(static_cast<std::size_t>(hidden_dim), 0.0);
    }
    p.fc_w.assign(static_cast<std::size_t>(hidden_dim), 0.0);
    return p;
}

void validate(const ModelParams& p) {
    if (p.hidden_dim < 1) throw StructuralError("hidden_dim must be >= 1");
    if (p.gcn_w.size() != kGcnLayers || p.gcn_b.size() != kGcnLayers)
        throw StructuralError("expected " + std::to_string(kGcnLayers) + " gcn layers");
    for (int l = 0; l < kGcnLayers; ++l) {
        const int in = l == 0 ? kNodeFeatureDim : p.hidden_dim;
        const auto& w = p.gcn_w[static_cast<std::size_t>(l)];
        if (w.rows() != in || w.cols() != p.hidden_dim)
            throw StructuralError("layer " + std::to_string(l) + " weight is " +
                                  std::to_string(w.rows()) + "x" + std::to_string(w.cols()) +
                                  ", expected " + std::to_string(in) + "x" +
                                  std::to_string(p.hidden_dim));
        if (p.gcn_b[static_cast<std::size_t>(l)].size() != static_cast<std::size_t>(p.hidden_dim))
            throw StructuralError("layer " + std::to_string(l) + " bias size mismatch");
        for (double v : w.values())
            if (!std::isfinite(v)) throw StructuralError("non-finite weight in layer " + std::to_string(l));
        for (double v : p.gcn_b[static_cast<std::size_t>(l)])
            if (!std::isfinite(v)) throw StructuralError("non-finite bias in layer " + std::to_string(l));
    }
    if (p.fc_w.size() != static_cast<std::size_t>(p.hidden_dim))
        throw StructuralError("fc weight size mismatch");
    for (double v : p.fc_w)
        if (!std::isfinite(v)) throw StructuralError("non-finite fc weight");
    if (!std::isfinite(p.fc_b)) throw StructuralError("non-finite fc bias");
    for (double s : p.feat_std)
        if (!(s > 0.0)) throw StructuralError("feature_norm std entries must be > 0");
}

void validate(const TrainConfig& cfg) {
    if (cfg.hidden_dim < 1) throw ConfigError("hidden_dim must be >= 1");
    if (!(cfg.learning_rate > 0.0)) throw ConfigError("learning_rate must be > 0");
    if (cfg.epochs < 1) throw ConfigError("epochs must be >= 1");
    if (cfg.batch_size < 1) throw ConfigError("batch_size must be >= 1");
    if (!(cfg.adam_beta1 > 0.0 && cfg.adam_beta1 < 1.0))
        throw ConfigError("adam_beta1 must be in (0,1)");
    if (!(cfg.adam_beta2 > 0.0 && cfg.adam_beta2 < 1.0))
        throw ConfigError("adam_beta2 must be in (0,1)");
    if (!(cfg.adam_eps > 0.0)) throw ConfigError("adam_eps must be > 0");
}

Csr normalized_adjacency(const GraphRep& g) {
    const int n = g.n_nodes;
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [i, j] = g.edges[e];
        double w = g.weights[e];
        adj[static_cast<std::size_t>(i)].emplace_back(j, w);
        adj[static_cast<std::size_t>(j)].emplace_back(i, w);
    }
    std::vector<double> degree(static_cast<std::size_t>(n), 1.0);  // self-loop weight 1
    for (int i = 0; i < n; ++i) {
        for (const auto& [j, w] : adj[static_cast<std::size_t>(i)]) degree[static_cast<std::size_t>(i)] += w;
        if (!(degree[static_cast<std::size_t>(i)] > 0.0))
            throw StructuralError("node " + std::to_string(i) +
                                  " has non-positive weighted degree; cannot normalize");
    }

    Csr s;
    s.n = n;
    s.rowptr.resize(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        adj[static_cast<std::size_t>(i)].emplace_back(i, 0.0);  // placeholder for the self-loop
        std::sort(adj[static_cast<std::size_t>(i)].begin(), adj[static_cast<std::size_t>(i)].end());
        s.rowptr[static_cast<std::size_t>(i) + 1] =
            s.rowptr[static_cast<std::size_t>(i)] + static_cast<int>(adj[static_cast<std::size_t>(i)].size());
    }
    s.col.resize(static_cast<std::size_t>(s.rowptr[static_cast<std::size_t>(n)]));
    s.val.resize(s.col.size());
    for (int i = 0; i < n; ++i) {
        int idx = s.rowptr[static_cast<std::size_t>(i)];
        for (const auto& [j, w] : adj[static_cast<std::size_t>(i)]) {
            s.col[static_cast<std::size_t>(idx)] = j;
            s.val[static_cast<std::size_t>(idx)] =
                (j == i) ? 1.0 / degree[static_cast<std::size_t>(i)]
                         : w / std::sqrt(degree[static_cast<std::size_t>(i)] * degree[static_cast<std::size_t>(j)]);
            ++idx;
        }
    }
    return s;
}

namespace {

struct Prepped {
    Csr s;
    Matrix x0;  // standardized node features
};

Prepped prep_graph(const GraphRep& g, const ModelParams& p) {
    Prepped pg;
    pg.s = normalized_adjacency(g);
    pg.x0 = Matrix(g.n_nodes, kNodeFeatureDim);
    for (int i = 0; i < g.n_nodes; ++i)
        for (int j = 0; j < kNodeFeatureDim; ++j)
            pg.x0(i, j) = (g.node_features(i, j) - p.feat_mean[static_cast<std::size_t>(j)]) /
                          p.feat_std[static_cast<std::size_t>(j)];
    return pg;
}

struct Cache {
    std::vector<Matrix> m;  // S * H_l
    std::vector<Matrix> z;  // pre-activation
    std::vector<double> pooled;
    double prob = 0.0;
};

double forward_impl(const Prepped& pg, const ModelParams& p, Cache* cache) {
    const int n = pg.x0.rows();
    Matrix h = pg.x0;
    if (cache) {
        cache->m.clear();
        cache->z.clear();
    }
    for (int l = 0; l < kGcnLayers; ++l) {
        Matrix m = csr_matmul(pg.s, h);
        Matrix z = matmul(m, p.gcn_w[static_cast<std::size_t>(l)]);
        const auto& b = p.gcn_b[static_cast<std::size_t>(l)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < p.hidden_dim; ++j) z(i, j) += b[static_cast<std::size_t>(j)];
        if (cache) {
            cache->m.push_back(std::move(m));
            cache->z.push_back(z);
        }
        if (l < kGcnLayers - 1) {
            h = std::move(z);
            for (double& v : h.values()) v = v > 0.0 ? v : 0.0;
        } else {
            h = std::move(z);  // last layer is linear
        }
    }

    std::vector<double> pooled(static_cast<std::size_t>(p.hidden_dim), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p.hidden_dim; ++j) pooled[static_cast<std::size_t>(j)] += h(i, j);
    for (double& v : pooled) v /= static_cast<double>(n);

    double logit = p.fc_b;
    for (int j = 0; j < p.hidden_dim; ++j) logit += p.fc_w[static_cast<std::size_t>(j)] * pooled[static_cast<std::size_t>(j)];
    double prob = sigmoid(logit);
    if (cache) {
        cache->pooled = std::move(pooled);
        cache->prob = prob;
    }
    return prob;
}

Gradients zero_grads(const ModelParams& p) {
    Gradients g;
    for (int l = 0; l < kGcnLayers; ++l) {
        const int in = l == 0 ? kNodeFeatureDim : p.hidden_dim;
        g.gcn_w.emplace_back(in, p.hidden_dim);
        g.gcn_b.emplace_back(static_cast<std::size_t>(p.hidden_dim), 0.0);
    }
    g.fc_w.assign(static_cast<std::size_t>(p.hidden_dim), 0.0);
    return g;
}

// Reverse pass; relies on forward caches. The BCE clamp only touches the loss
// value, so d(loss)/d(logit) = prob - y everywhere.
Gradients backward_impl(const Prepped& pg, const ModelParams& p, const Cache& cache, bool y) {
    const int n = pg.x0.rows();
    const int h = p.hidden_dim;
    Gradients grads = zero_grads(p);

    const double dlogit = cache.prob - (y ? 1.0 : 0.0);
    grads.fc_b = dlogit;
    for (int j = 0; j < h; ++j) grads.fc_w[static_cast<std::size_t>(j)] = dlogit * cache.pooled[static_cast<std::size_t>(j)];

    // d(loss)/d(H5): every node row receives fc_w * dlogit / n
    Matrix dz(n, h);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < h; ++j)
            dz(i, j) = dlogit * p.fc_w[static_cast<std::size_t>(j)] / static_cast<double>(n);

    for (int l = kGcnLayers - 1; l >= 0; --l) {
        grads.gcn_w[static_cast<std::size_t>(l)] = matmul_at_b(cache.m[static_cast<std::size_t>(l)], dz);
        auto& db = grads.gcn_b[static_cast<std::size_t>(l)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < h; ++j) db[static_cast<std::size_t>(j)] += dz(i, j);

        if (l == 0) break;
        Matrix dm = matmul(dz, transpose(p.gcn_w[static_cast<std::size_t>(l)]));
        Matrix dh = csr_matmul(pg.s, dm);  // S is symmetric
        const Matrix& zprev = cache.z[static_cast<std::size_t>(l - 1)];
        dz = std::move(dh);
        for (std::size_t t = 0; t < dz.values().size(); ++t)
            if (zprev.values()[t] <= 0.0) dz.values()[t] = 0.0;
    }
    return grads;
}

}  // namespace

double gcn_forward(const GraphRep& g, const ModelParams& p) {
    validate(p);
    if (g.node_features.cols() != kNodeFeatureDim)
        throw StructuralError("expected " + std::to_string(kNodeFeatureDim) +
                              " node features, got " + std::to_string(g.node_features.cols()));
    Prepped pg = prep_graph(g, p);
    return forward_impl(pg, p, nullptr);
}

double bce_loss(double p, bool y) {
    double q = std::clamp(p, kBceClamp, 1.0 - kBceClamp);
    return -(y ? std::log(q) : std::log(1.0 - q));
}

std::pair<double, Gradients> backward(const GraphRep& g, const ModelParams& p, bool y) {
    validate(p);
    Prepped pg = prep_graph(g, p);
    Cache cache;
    double prob = forward_impl(pg, p, &cache);
    return {prob, backward_impl(pg, p, cache, y)};
}

std::pair<double, bool> predict(const GraphRep& g, const ModelParams& p, double threshold) {
    double prob = gcn_forward(g, p);
    return {prob, prob >= threshold};
}

namespace {

// Uniform iteration over all parameter tensors, in a fixed order shared by
// params, gradients, and optimizer state.
template <typename P, typename Visit>
void visit_params(P& params, Visit&& visit) {
    for (auto& w : params.gcn_w) visit(w.values().data(), w.values().size());
    for (auto& b : params.gcn_b) visit(b.data(), b.size());
    visit(params.fc_w.data(), params.fc_w.size());
    visit(&params.fc_b, 1);
}

std::size_t param_count(const ModelParams& p) {
    std::size_t count = 0;
    visit_params(p, [&](const double*, std::size_t n) { count += n; });
    return count;
}

}  // namespace

std::pair<ModelParams, TrainLog> train(const std::vector<std::pair<GraphRep, bool>>& corpus,
                                       const TrainConfig& cfg,
                                       const std::vector<std::pair<GraphRep, bool>>* val) {
    validate(cfg);
    if (corpus.empty()) throw ConfigError("training corpus is empty");
    bool has_pos = false, has_neg = false;
    for (const auto& [g, y] : corpus) (y ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg)
        throw ConfigError("training corpus must contain both classes");

    ModelParams p = zero_params(cfg.hidden_dim);
    p.train_seed = cfg.seed;

    // Node-feature standardization from the training corpus.
    {
        std::array<double, kNodeFeatureDim> mean{0, 0, 0}, var{0, 0, 0};
        std::size_t rows = 0;
        for (const auto& [g, y] : corpus) {
            for (int i = 0; i < g.n_nodes; ++i)
                for (int j = 0; j < kNodeFeatureDim; ++j)
                    mean[static_cast<std::size_t>(j)] += g.node_features(i, j);
            rows += static_cast<std::size_t>(g.n_nodes);
        }
        for (auto& m : mean) m /= static_cast<double>(rows);
        for (const auto& [g, y] : corpus)
            for (int i = 0; i < g.n_nodes; ++i)
                for (int j = 0; j < kNodeFeatureDim; ++j) {
                    double c = g.node_features(i, j) - mean[static_cast<std::size_t>(j)];
                    var[static_cast<std::size_t>(j)] += c * c;
                }
        for (int j = 0; j < kNodeFeatureDim; ++j) {
            double s = std::sqrt(var[static_cast<std::size_t>(j)] / static_cast<double>(rows));
            p.feat_mean[static_cast<std::size_t>(j)] = mean[static_cast<std::size_t>(j)];
            p.feat_std[static_cast<std::size_t>(j)] = s > 0.0 ? s : 1.0;
        }
    }

    // Xavier-uniform init.
    {
        Rng rng(derive_seed(cfg.seed, 0x1417ULL));
        for (int l = 0; l < kGcnLayers; ++l) {
            auto& w = p.gcn_w[static_cast<std::size_t>(l)];
            double a = std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
            for (double& v : w.values()) v = rng.uniform(-a, a);
        }
        double a = std::sqrt(6.0 / static_cast<double>(cfg.hidden_dim + 1));
        for (double& v : p.fc_w) v = rng.uniform(-a, a);
    }

    const int n = static_cast<int>(corpus.size());
    std::vector<Prepped> prepped(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
        prepped[static_cast<std::size_t>(i)] = prep_graph(corpus[static_cast<std::size_t>(i)].first, p);

    // Adam state, flat over the fixed parameter order.
    const std::size_t nparams = param_count(p);
    std::vector<double> adam_m(nparams, 0.0), adam_v(nparams, 0.0);
    long adam_t = 0;

    Rng shuffle_rng(derive_seed(cfg.seed, 0x50ffULL));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    TrainLog log;
    std::vector<Gradients> batch_grads(static_cast<std::size_t>(cfg.batch_size), zero_grads(p));
    std::vector<double> batch_loss(static_cast<std::size_t>(cfg.batch_size), 0.0);
    std::vector<char> batch_correct(static_cast<std::size_t>(cfg.batch_size), 0);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        double loss_sum = 0.0;
        long correct = 0;

        for (int start = 0; start < n; start += cfg.batch_size) {
            const int bsz = std::min(cfg.batch_size, n - start);
            // Per-graph gradients in parallel; summed serially in batch order
            // so the update is reproducible at any thread count.
#pragma omp parallel for schedule(dynamic)
            for (int b = 0; b < bsz; ++b) {
                const int idx = order[static_cast<std::size_t>(start + b)];
                const bool y = corpus[static_cast<std::size_t>(idx)].second;
                Cache cache;
                double prob = forward_impl(prepped[static_cast<std::size_t>(idx)], p, &cache);
                batch_grads[static_cast<std::size_t>(b)] =
                    backward_impl(prepped[static_cast<std::size_t>(idx)], p, cache, y);
                batch_loss[static_cast<std::size_t>(b)] = bce_loss(prob, y);
                batch_correct[static_cast<std::size_t>(b)] = (prob >= 0.5) == y;
            }
            for (int b = 0; b < bsz; ++b) {
                loss_sum += batch_loss[static_cast<std::size_t>(b)];
                correct += batch_correct[static_cast<std::size_t>(b)];
            }

            // Mean gradient over the batch (summed in batch order), then one
            // Adam step.
            ++adam_t;
            const double bc1 = 1.0 - std::pow(cfg.adam_beta1, static_cast<double>(adam_t));
            const double bc2 = 1.0 - std::pow(cfg.adam_beta2, static_cast<double>(adam_t));
            std::vector<std::pair<double*, std::size_t>> pviews;
            visit_params(p, [&](double* ptr, std::size_t len) { pviews.emplace_back(ptr, len); });
            std::vector<std::vector<double*>> gviews(static_cast<std::size_t>(bsz));
            for (int b = 0; b < bsz; ++b)
                visit_params(batch_grads[static_cast<std::size_t>(b)],
                             [&](double* ptr, std::size_t) { gviews[static_cast<std::size_t>(b)].push_back(ptr); });

            std::size_t cursor = 0;
            for (std::size_t vi = 0; vi < pviews.size(); ++vi) {
                auto [ptr, len] = pviews[vi];
                for (std::size_t off = 0; off < len; ++off) {
                    double gsum = 0.0;
                    for (int b = 0; b < bsz; ++b) gsum += gviews[static_cast<std::size_t>(b)][vi][off];
                    const double grad = gsum / static_cast<double>(bsz);
                    double& m = adam_m[cursor];
                    double& v = adam_v[cursor];
                    m = cfg.adam_beta1 * m + (1.0 - cfg.adam_beta1) * grad;
                    v = cfg.adam_beta2 * v + (1.0 - cfg.adam_beta2) * grad * grad;
                    ptr[off] -= cfg.learning_rate * (m / bc1) / (std::sqrt(v / bc2) + cfg.adam_eps);
                    ++cursor;
                }
            }
        }

        log.epoch_loss.push_back(loss_sum / static_cast<double>(n));
        log.epoch_acc.push_back(static_cast<double>(correct) / static_cast<double>(n));
    }

    // Final accuracy on the validation set (training set if none given).
    {
        const auto& eval_set = val != nullptr && !val->empty() ? *val : corpus;
        long correct = 0;
        for (const auto& [g, y] : eval_set) {
            double prob = gcn_forward(g, p);
            if ((prob >= 0.5) == y) ++correct;
        }
        log.val_accuracy = static_cast<double>(correct) / static_cast<double>(eval_set.size());
    }

    return {std::move(p), std::move(log)};
}

namespace {

void dump_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void dump_vector(std::string& out, const std::vector<double>& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        dump_double(out, v[i]);
    }
    out += ']';
}

}  // namespace

// Hand-rolled writer so every number carries 17 significant digits; parsing
// is standard JSON.
void save_checkpoint(const ModelParams& p, const std::string& path) {
    validate(p);
    std::string out;
    out.reserve(1u << 16);
    out += "{\n\"format_version\":1,\n\"hidden_dim\":" + std::to_string(p.hidden_dim) + ",\n";
    out += "\"layers\":[";
    for (int l = 0; l < kGcnLayers; ++l) {
        if (l) out += ',';
        const auto& w = p.gcn_w[static_cast<std::size_t>(l)];
        out += "\n{\"w\":[";
        for (int i = 0; i < w.rows(); ++i) {
            if (i) out += ',';
            std::vector<double> row(w.row(i).begin(), w.row(i).end());
            dump_vector(out, row);
        }
        out += "],\"b\":";
        dump_vector(out, p.gcn_b[static_cast<std::size_t>(l)]);
        out += '}';
    }
    out += "],\n\"fc\":{\"w\":";
    dump_vector(out, p.fc_w);
    out += ",\"b\":";
    dump_double(out, p.fc_b);
    out += "},\n\"feature_norm\":{\"mean\":";
    dump_vector(out, std::vector<double>(p.feat_mean.begin(), p.feat_mean.end()));
    out += ",\"std\":";
    dump_vector(out, std::vector<double>(p.feat_std.begin(), p.feat_std.end()));
    out += "},\n\"train_seed\":" + std::to_string(p.train_seed) + "\n}\n";

    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << out;
    if (!f) throw IoError("write failed: " + path);
}

ModelParams load_checkpoint(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open checkpoint: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": not a valid checkpoint: " + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != 1)
            throw FormatError(path + ": unsupported format_version");
        const int h = j.at("hidden_dim").get<int>();
        ModelParams p = zero_params(h);
        const auto& layers = j.at("layers");
        if (layers.size() != kGcnLayers)
            throw FormatError(path + ": expected " + std::to_string(kGcnLayers) + " layers, got " +
                              std::to_string(layers.size()));
        for (int l = 0; l < kGcnLayers; ++l) {
            const auto& layer = layers[static_cast<std::size_t>(l)];
            const auto& wj = layer.at("w");
            const int expect_rows = l == 0 ? kNodeFeatureDim : h;
            if (static_cast<int>(wj.size()) != expect_rows)
                throw FormatError(path + ": layer " + std::to_string(l) + " has " +
                                  std::to_string(wj.size()) + " weight rows, expected " +
                                  std::to_string(expect_rows));
            Matrix w(expect_rows, h);
            for (int i = 0; i < expect_rows; ++i) {
                const auto& rowj = wj[static_cast<std::size_t>(i)];
                if (static_cast<int>(rowj.size()) != h)
                    throw FormatError(path + ": layer " + std::to_string(l) + " row " +
                                      std::to_string(i) + " has " + std::to_string(rowj.size()) +
                                      " cols, expected " + std::to_string(h));
                for (int c = 0; c < h; ++c) w(i, c) = rowj[static_cast<std::size_t>(c)].get<double>();
            }
            p.gcn_w[static_cast<std::size_t>(l)] = std::move(w);
            auto b = layer.at("b").get<std::vector<double>>();
            if (static_cast<int>(b.size()) != h)
                throw FormatError(path + ": layer " + std::to_string(l) + " bias length " +
                                  std::to_string(b.size()) + ", expected " + std::to_string(h));
            p.gcn_b[static_cast<std::size_t>(l)] = std::move(b);
        }
        auto fw = j.at("fc").at("w").get<std::vector<double>>();
        if (static_cast<int>(fw.size()) != h)
            throw FormatError(path + ": fc weight length " + std::to_string(fw.size()) +
                              ", expected " + std::to_string(h));
        p.fc_w = std::move(fw);
        p.fc_b = j.at("fc").at("b").get<double>();
        auto mean = j.at("feature_norm").at("mean").get<std::vector<double>>();
        auto std_ = j.at("feature_norm").at("std").get<std::vector<double>>();
        if (mean.size() != kNodeFeatureDim || std_.size() != kNodeFeatureDim)
            throw FormatError(path + ": feature_norm must have " +
                              std::to_string(kNodeFeatureDim) + " entries");
        for (int i = 0; i < kNodeFeatureDim; ++i) {
            p.feat_mean[static_cast<std::size_t>(i)] = mean[static_cast<std::size_t>(i)];
            p.feat_std[static_cast<std::size_t>(i)] = std_[static_cast<std::size_t>(i)];
        }
        p.train_seed = j.at("train_seed").get<std::uint64_t>();
        validate(p);
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": malformed checkpoint: " + e.what());
    }
}

}  // namespace acttend
