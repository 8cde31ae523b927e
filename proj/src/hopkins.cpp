#include "acttend/hopkins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "acttend/errors.hpp"
#include "acttend/log.hpp"
#include "acttend/rng.hpp"

namespace acttend {

HopkinsResult hopkins_statistic(const Matrix& points, int m, std::uint64_t seed) {
    const int n = points.rows(), d = points.cols();
    if (n < 10) throw InputError("hopkins_statistic needs n >= 10, got " + std::to_string(n));
    if (m < 1) m = std::max(1, n / 10);
    if (m > n / 2)
        throw InputError("hopkins_statistic: m = " + std::to_string(m) + " exceeds n/2 = " +
                         std::to_string(n / 2));

    std::vector<double> lo(static_cast<std::size_t>(d), std::numeric_limits<double>::infinity());
    std::vector<double> hi(static_cast<std::size_t>(d), -std::numeric_limits<double>::infinity());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], points(i, j));
            hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], points(i, j));
        }
    for (int j = 0; j < d; ++j) {
        if (lo[static_cast<std::size_t>(j)] == hi[static_cast<std::size_t>(j)]) {
            double pad = std::max(std::abs(lo[static_cast<std::size_t>(j)]), 1.0) *
                         std::numeric_limits<double>::epsilon() * 8;
            lo[static_cast<std::size_t>(j)] -= pad;
            hi[static_cast<std::size_t>(j)] += pad;
            log_info("hopkins_statistic: axis %d is degenerate, widened by %g", j, 2 * pad);
        }
    }

    Rng rng(seed);
    std::vector<int> probes = rng.sample_without_replacement(n, m);
    Matrix synth(m, d);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < d; ++j)
            synth(i, j) = rng.uniform(lo[static_cast<std::size_t>(j)], hi[static_cast<std::size_t>(j)]);

    std::vector<double> w(static_cast<std::size_t>(m)), u(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        const int pi = probes[static_cast<std::size_t>(i)];
        double wmin = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (j == pi) continue;
            wmin = std::min(wmin, sq_dist(points.row(pi), points.row(j)));
        }
        w[static_cast<std::size_t>(i)] = std::sqrt(wmin);
        double umin = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j)
            umin = std::min(umin, sq_dist(synth.row(i), points.row(j)));
        u[static_cast<std::size_t>(i)] = std::sqrt(umin);
    }

    // d-th powers, rescaled by the largest distance so high dimensions
    // neither overflow nor underflow; the ratio is unchanged.
    double scale = 0.0;
    for (int i = 0; i < m; ++i)
        scale = std::max({scale, w[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i)]});
    double usum = 0.0, wsum = 0.0;
    if (scale > 0.0) {
        for (int i = 0; i < m; ++i) {
            usum += std::pow(u[static_cast<std::size_t>(i)] / scale, d);
            wsum += std::pow(w[static_cast<std::size_t>(i)] / scale, d);
        }
    }
    HopkinsResult r;
    r.m_probes = m;
    r.seed = seed;
    r.score = (usum + wsum) > 0.0 ? usum / (usum + wsum) : 0.5;
    return r;
}

bool hopkins_classify(const Matrix& points, double threshold, int m, std::uint64_t seed) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw ConfigError("hopkins threshold must be in (0,1)");
    return hopkins_statistic(points, m, seed).score >= threshold;
}

}  // namespace acttend
