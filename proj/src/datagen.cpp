#include "acttend/datagen.hpp"

#include <algorithm>
#include <string>

#include "acttend/errors.hpp"
#include "acttend/rng.hpp"

namespace acttend {

void validate(const GenConfig& cfg) {
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min)
        throw ConfigError("n_points range [" + std::to_string(cfg.n_min) + "," +
                          std::to_string(cfg.n_max) + "] invalid: need 2 <= n_min <= n_max");
    if (cfg.dim < 1) throw ConfigError("dim must be >= 1, got " + std::to_string(cfg.dim));
    if (cfg.k_min < 2) throw ConfigError("k_clusters min is 2, got " + std::to_string(cfg.k_min));
    if (cfg.k_max < cfg.k_min)
        throw ConfigError("k_clusters range [" + std::to_string(cfg.k_min) + "," +
                          std::to_string(cfg.k_max) + "] is empty");
    const int k_cap = std::max(2, cfg.n_min / 4);
    if (cfg.k_max > k_cap)
        throw ConfigError("k_clusters max " + std::to_string(cfg.k_max) +
                          " exceeds cap max(2, n_min/4) = " + std::to_string(k_cap));
    if (!(cfg.cluster_std > 0.0)) throw ConfigError("cluster_std must be > 0");
    if (!(cfg.box_halfwidth > 0.0)) throw ConfigError("box_halfwidth must be > 0");
}

namespace {

int draw_between(Rng& rng, int lo, int hi) {
    if (lo == hi) return lo;
    return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

Dataset gen_clustered(const GenConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    const int n = draw_between(rng, cfg.n_min, cfg.n_max);
    const int k = draw_between(rng, cfg.k_min, cfg.k_max);
    const int d = cfg.dim;

    Matrix centers(k, d);
    for (int c = 0; c < k; ++c)
        for (int j = 0; j < d; ++j)
            centers(c, j) = rng.uniform(-cfg.box_halfwidth, cfg.box_halfwidth);

    // n/k points each, remainder spread over the first clusters
    std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
    for (int c = 0; c < n % k; ++c) ++sizes[static_cast<std::size_t>(c)];

    Dataset ds;
    ds.points = Matrix(n, d);
    ds.label = true;
    ds.seed = cfg.seed;
    int row = 0;
    for (int c = 0; c < k; ++c) {
        for (int p = 0; p < sizes[static_cast<std::size_t>(c)]; ++p, ++row)
            for (int j = 0; j < d; ++j)
                ds.points(row, j) = centers(c, j) + cfg.cluster_std * rng.normal();
    }
    return ds;
}

Dataset gen_uniform(int n, int d, double box_halfwidth, std::uint64_t seed) {
    if (n < 2) throw ConfigError("n must be >= 2, got " + std::to_string(n));
    if (d < 1) throw ConfigError("dim must be >= 1, got " + std::to_string(d));
    if (!(box_halfwidth > 0.0)) throw ConfigError("box_halfwidth must be > 0");
    Rng rng(seed);
    Dataset ds;
    ds.points = Matrix(n, d);
    ds.label = false;
    ds.seed = seed;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j)
            ds.points(i, j) = rng.uniform(-box_halfwidth, box_halfwidth);
    return ds;
}

std::vector<Dataset> gen_corpus(const CorpusConfig& cfg) {
    if (cfg.n_datasets <= 0 || cfg.n_datasets % 2 != 0)
        throw ConfigError("n_datasets must be positive and even, got " +
                          std::to_string(cfg.n_datasets));
    if (cfg.dims.empty()) throw ConfigError("dims list is empty");
    if (!(cfg.std_frac_min > 0.0) || cfg.std_frac_max < cfg.std_frac_min)
        throw ConfigError("cluster_std fraction range invalid");
    {
        GenConfig probe = cfg.tpl;
        probe.cluster_std = cfg.std_frac_min * cfg.tpl.box_halfwidth;
        validate(probe);
    }

    const int n = cfg.n_datasets;
    std::vector<Dataset> corpus(static_cast<std::size_t>(n));

    // First half positives, second half negatives; shuffled below. Each
    // dataset depends only on (master_seed, i), so this loop can fan out.
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        Rng rng(derive_seed(cfg.master_seed, static_cast<std::uint64_t>(i)));
        const int dim = cfg.dims[rng.below(cfg.dims.size())];
        const bool positive = i < n / 2;
        if (positive) {
            GenConfig g = cfg.tpl;
            g.dim = dim;
            g.cluster_std = rng.uniform(cfg.std_frac_min, cfg.std_frac_max) * cfg.tpl.box_halfwidth;
            g.seed = rng.next();
            corpus[static_cast<std::size_t>(i)] = gen_clustered(g);
        } else {
            const int pts = draw_between(rng, cfg.tpl.n_min, cfg.tpl.n_max);
            corpus[static_cast<std::size_t>(i)] = gen_uniform(pts, dim, cfg.tpl.box_halfwidth, rng.next());
        }
    }

    Rng shuffle_rng(derive_seed(cfg.master_seed, 0x0deaULL));
    shuffle_rng.shuffle(corpus);
    return corpus;
}

}  // namespace acttend
