#include "acttend/lsh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "acttend/errors.hpp"
#include "acttend/rng.hpp"

namespace acttend {

void validate(const LshConfig& cfg) {
    if (cfg.n_tables < 1) throw ConfigError("n_tables must be >= 1, got " + std::to_string(cfg.n_tables));
    if (cfg.n_bits < 1 || cfg.n_bits > 32)
        throw ConfigError("n_bits must be in [1,32], got " + std::to_string(cfg.n_bits));
    if (!(cfg.neighbor_pct > 0.0) || cfg.neighbor_pct > 1.0)
        throw ConfigError("neighbor_pct must be in (0,1]");
    if (cfg.neighbor_cap < 1)
        throw ConfigError("neighbor_cap must be >= 1, got " + std::to_string(cfg.neighbor_cap));
}

LshIndex::LshIndex(const Matrix& points, const LshConfig& cfg) : points_(points), cfg_(cfg) {
    validate(cfg);
    const int n = points.rows(), d = points.cols();
    if (n < 2) throw InputError("LSH index needs at least 2 points, got " + std::to_string(n));

    hyperplanes_.reserve(static_cast<std::size_t>(cfg.n_tables));
    buckets_.resize(static_cast<std::size_t>(cfg.n_tables));
    keys_.assign(static_cast<std::size_t>(cfg.n_tables),
                 std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));

    for (int t = 0; t < cfg.n_tables; ++t) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
        Matrix planes(cfg.n_bits, d);
        for (int b = 0; b < cfg.n_bits; ++b)
            for (int j = 0; j < d; ++j) planes(b, j) = rng.normal();
        hyperplanes_.push_back(std::move(planes));
    }

    // keys are independent per (table, point); bucket fill stays in index order
#pragma omp parallel for schedule(static)
    for (int t = 0; t < cfg.n_tables; ++t) {
        const Matrix& planes = hyperplanes_[static_cast<std::size_t>(t)];
        for (int i = 0; i < n; ++i) {
            std::uint32_t key = 0;
            for (int b = 0; b < cfg.n_bits; ++b)
                if (dot(planes.row(b), points_.row(i)) >= 0.0) key |= (1u << b);
            keys_[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] = key;
        }
        auto& table = buckets_[static_cast<std::size_t>(t)];
        for (int i = 0; i < n; ++i)
            table[keys_[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)]].push_back(i);
    }
}

std::uint32_t LshIndex::key_of(int table, int point) const {
    if (table < 0 || table >= cfg_.n_tables || point < 0 || point >= n_points())
        throw LookupError("key_of(" + std::to_string(table) + "," + std::to_string(point) +
                          ") out of range");
    return keys_[static_cast<std::size_t>(table)][static_cast<std::size_t>(point)];
}

std::vector<std::pair<int, double>> LshIndex::query_neighbors(int i) const {
    const int n = n_points();
    if (i < 0 || i >= n) throw LookupError("query_neighbors: no point with id " + std::to_string(i));

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<double, int>> candidates;
    for (int t = 0; t < cfg_.n_tables; ++t) {
        const auto& table = buckets_[static_cast<std::size_t>(t)];
        auto it = table.find(keys_[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)]);
        if (it == table.end()) continue;
        for (int j : it->second) {
            if (j == i || seen[static_cast<std::size_t>(j)]) continue;
            seen[static_cast<std::size_t>(j)] = 1;
            candidates.emplace_back(std::sqrt(sq_dist(points_.row(i), points_.row(j))), j);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    const std::size_t budget = std::min<std::size_t>(
        static_cast<std::size_t>(std::ceil(cfg_.neighbor_pct * n)),
        static_cast<std::size_t>(cfg_.neighbor_cap));
    if (candidates.size() > budget) candidates.resize(budget);

    std::vector<std::pair<int, double>> out;
    out.reserve(candidates.size());
    for (const auto& [dist, id] : candidates) out.emplace_back(id, dist);
    return out;
}

Matrix node_features(const Matrix& points, const LshConfig& cfg) {
    LshIndex index(points, cfg);
    const int n = points.rows();
    Matrix feats(n, 3);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) {
        auto neigh = index.query_neighbors(i);
        if (neigh.empty()) continue;  // row stays [0, 0, 0]
        double mean = 0.0;
        for (const auto& [id, dist] : neigh) mean += dist;
        mean /= static_cast<double>(neigh.size());
        double var = 0.0;
        for (const auto& [id, dist] : neigh) {
            double c = dist - mean;
            var += c * c;
        }
        var /= static_cast<double>(neigh.size());
        feats(i, 0) = mean;
        feats(i, 1) = static_cast<double>(neigh.size());
        feats(i, 2) = var;
    }
    return feats;
}

}  // namespace acttend
