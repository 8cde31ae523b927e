#include "acttend/silhouette.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "acttend/errors.hpp"
#include "acttend/kmeans.hpp"
#include "acttend/rng.hpp"

namespace acttend {

double silhouette(const Matrix& points, const std::vector<int>& assignment) {
    const int n = points.rows();
    if (n < 3) throw InputError("silhouette needs n >= 3, got " + std::to_string(n));
    if (static_cast<int>(assignment.size()) != n)
        throw InputError("assignment length does not match point count");

    int k = 0;
    for (int a : assignment) {
        if (a < 0) throw InputError("negative cluster id");
        k = std::max(k, a + 1);
    }
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int a : assignment) ++counts[static_cast<std::size_t>(a)];
    int distinct = 0;
    for (int c : counts)
        if (c > 0) ++distinct;
    if (distinct < 2) throw InputError("silhouette needs at least 2 distinct clusters");

    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        std::vector<double> sum(static_cast<std::size_t>(k), 0.0);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            sum[static_cast<std::size_t>(assignment[static_cast<std::size_t>(j)])] +=
                std::sqrt(sq_dist(points.row(i), points.row(j)));
        }
        const int own = assignment[static_cast<std::size_t>(i)];
        const int own_cnt = counts[static_cast<std::size_t>(own)];
        if (own_cnt <= 1) continue;  // singleton: s(i) = 0
        const double a = sum[static_cast<std::size_t>(own)] / static_cast<double>(own_cnt - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            if (c == own || counts[static_cast<std::size_t>(c)] == 0) continue;
            b = std::min(b, sum[static_cast<std::size_t>(c)] / static_cast<double>(counts[static_cast<std::size_t>(c)]));
        }
        const double denom = std::max(a, b);
        s[static_cast<std::size_t>(i)] = denom > 0.0 ? (b - a) / denom : 0.0;
    }

    double total = 0.0;
    for (int i = 0; i < n; ++i) total += s[static_cast<std::size_t>(i)];
    return total / static_cast<double>(n);
}

SilhouetteBest silhouette_best(const Matrix& points, int k_max_cap, std::uint64_t seed) {
    const int n = points.rows();
    if (n < 4) throw InputError("silhouette_best needs n >= 4, got " + std::to_string(n));
    if (k_max_cap < 2) throw ConfigError("k_max_cap must be >= 2");

    SilhouetteBest best;
    best.score = -std::numeric_limits<double>::infinity();
    const int k_hi = std::min(k_max_cap, n - 1);
    for (int k = 2; k <= k_hi; ++k) {
        KmeansResult km = kmeans(points, k, 300, 5, derive_seed(seed, static_cast<std::uint64_t>(k)));
        double score = silhouette(points, km.assignment);
        if (score > best.score) {
            best.score = score;
            best.k = k;
        }
    }
    return best;
}

bool silhouette_classify(const Matrix& points, double threshold, int k_max_cap, std::uint64_t seed) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw ConfigError("silhouette threshold must be in (0,1)");
    return silhouette_best(points, k_max_cap, seed).score >= threshold;
}

}  // namespace acttend
