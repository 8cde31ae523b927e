#include "acttend/kmeans.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "acttend/errors.hpp"
#include "acttend/kernels.hpp"
#include "acttend/rng.hpp"

namespace acttend {

namespace {

Matrix kmeanspp_centers(const Matrix& x, int k, Rng& rng) {
    const int n = x.rows(), d = x.cols();
    Matrix centers(k, d);
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);

    int first = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    chosen[static_cast<std::size_t>(first)] = 1;
    for (int j = 0; j < d; ++j) centers(0, j) = x(first, j);

    std::vector<double> min_sq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) min_sq[static_cast<std::size_t>(i)] = sq_dist(x.row(i), centers.row(0));

    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += min_sq[static_cast<std::size_t>(i)];
        int pick = -1;
        if (total > 0.0) {
            double r = rng.uniform01() * total;
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += min_sq[static_cast<std::size_t>(i)];
                if (acc > r) {
                    pick = i;
                    break;
                }
            }
            if (pick < 0) pick = n - 1;  // r landed on the top of the last prefix
        } else {
            // all remaining mass is zero (duplicate points): first unchosen id
            for (int i = 0; i < n; ++i)
                if (!chosen[static_cast<std::size_t>(i)]) {
                    pick = i;
                    break;
                }
            if (pick < 0) pick = 0;
        }
        chosen[static_cast<std::size_t>(pick)] = 1;
        for (int j = 0; j < d; ++j) centers(c, j) = x(pick, j);
        for (int i = 0; i < n; ++i)
            min_sq[static_cast<std::size_t>(i)] =
                std::min(min_sq[static_cast<std::size_t>(i)], sq_dist(x.row(i), centers.row(c)));
    }
    return centers;
}

}  // namespace

KmeansResult kmeans(const Matrix& points, int k, int max_iter, int n_init, std::uint64_t seed) {
    const int n = points.rows(), d = points.cols();
    if (k < 2) throw InputError("kmeans needs k >= 2, got " + std::to_string(k));
    if (k > n) throw InputError("kmeans: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    if (max_iter < 1 || n_init < 1) throw ConfigError("kmeans: max_iter and n_init must be >= 1");

    KmeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < n_init; ++restart) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
        Matrix centers = kmeanspp_centers(points, k, rng);

        std::vector<int> labels, prev_labels;
        std::vector<double> sq;
        std::vector<double> trace;
        int iters = 0;
        double inertia = 0.0;
        bool converged = false;
        for (; iters < max_iter; ++iters) {
            kmeans_assign(points, centers, labels, sq);

            // empty-cluster repair: reseed at the point farthest from its center
            std::vector<int> counts(static_cast<std::size_t>(k), 0);
            for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
            bool repaired = false;
            for (int c = 0; c < k; ++c) {
                if (counts[static_cast<std::size_t>(c)] > 0) continue;
                int far = 0;
                double far_d = -1.0;
                for (int i = 0; i < n; ++i)
                    if (sq[static_cast<std::size_t>(i)] > far_d) {
                        far_d = sq[static_cast<std::size_t>(i)];
                        far = i;
                    }
                for (int j = 0; j < d; ++j) centers(c, j) = points(far, j);
                kmeans_assign(points, centers, labels, sq);
                counts.assign(static_cast<std::size_t>(k), 0);
                for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
                repaired = true;
            }

            inertia = 0.0;
            for (int i = 0; i < n; ++i) inertia += sq[static_cast<std::size_t>(i)];
            trace.push_back(inertia);

            if (!repaired && labels == prev_labels) {
                converged = true;
                break;
            }
            prev_labels = labels;

            // update step: centers = per-cluster means
            centers = Matrix(k, d);
            for (int i = 0; i < n; ++i) {
                const int c = labels[static_cast<std::size_t>(i)];
                for (int j = 0; j < d; ++j) centers(c, j) += points(i, j);
            }
            for (int c = 0; c < k; ++c) {
                const int cnt = counts[static_cast<std::size_t>(c)];
                if (cnt > 0)
                    for (int j = 0; j < d; ++j) centers(c, j) /= static_cast<double>(cnt);
            }
        }

        if (!converged) {
            // max_iter exhausted after an update step: realign assignment and
            // inertia with the final centers
            kmeans_assign(points, centers, labels, sq);
            inertia = 0.0;
            for (int i = 0; i < n; ++i) inertia += sq[static_cast<std::size_t>(i)];
            trace.push_back(inertia);
        }

        if (inertia < best.inertia) {
            best.assignment = labels;
            best.centers = centers;
            best.inertia = inertia;
            best.iterations = iters;
            best.inertia_trace = trace;
        }
    }
    return best;
}

}  // namespace acttend
