#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately separate from the library code paths they check.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "acttend/gcn.hpp"
#include "acttend/matrix.hpp"
#include "acttend/rng.hpp"

namespace oracles {

// Exact KNN edges via the full distance matrix and std::set; mirrors the
// contract (K = max(1, round(pct*(n-1))), ties to lower index, symmetrized).
inline std::vector<std::pair<int, int>> brute_knn_edges(const acttend::Matrix& x, double pct) {
    const int n = x.rows();
    const int k = std::max(1, static_cast<int>(std::llround(pct * (n - 1))));
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<double, int>> d;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double s = 0;
            for (int c = 0; c < x.cols(); ++c) {
                double t = x(i, c) - x(j, c);
                s += t * t;
            }
            d.push_back({s, j});
        }
        std::sort(d.begin(), d.end());
        for (int t = 0; t < k; ++t) {
            int j = d[static_cast<std::size_t>(t)].second;
            pairs.insert({std::min(i, j), std::max(i, j)});
        }
    }
    return {pairs.begin(), pairs.end()};
}

// O(n^2) silhouette from an explicit distance matrix.
inline double reference_silhouette(const acttend::Matrix& x, const std::vector<int>& labels) {
    const int n = x.rows();
    std::vector<std::vector<double>> dist(static_cast<std::size_t>(n),
                                          std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int c = 0; c < x.cols(); ++c) {
                double t = x(i, c) - x(j, c);
                s += t * t;
            }
            dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::sqrt(s);
        }
    int k = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    for (int l : labels) ++count[static_cast<std::size_t>(l)];

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const int own = labels[static_cast<std::size_t>(i)];
        if (count[static_cast<std::size_t>(own)] <= 1) continue;
        std::vector<double> mean_to(static_cast<std::size_t>(k), 0.0);
        for (int j = 0; j < n; ++j)
            if (j != i)
                mean_to[static_cast<std::size_t>(labels[static_cast<std::size_t>(j)])] +=
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        double a = mean_to[static_cast<std::size_t>(own)] / (count[static_cast<std::size_t>(own)] - 1);
        double b = 1e300;
        for (int c = 0; c < k; ++c)
            if (c != own && count[static_cast<std::size_t>(c)] > 0)
                b = std::min(b, mean_to[static_cast<std::size_t>(c)] / count[static_cast<std::size_t>(c)]);
        double m = std::max(a, b);
        total += m > 0 ? (b - a) / m : 0.0;
    }
    return total / n;
}

// Globally optimal k-means inertia by enumerating all k^n labelings.
inline double exhaustive_kmeans_inertia(const acttend::Matrix& x, int k) {
    const int n = x.rows(), d = x.cols();
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    double best = 1e300;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < n; ++i) {
            label[static_cast<std::size_t>(i)] = static_cast<int>(c % k);
            c /= k;
        }
        std::vector<std::vector<double>> mean(static_cast<std::size_t>(k),
                                              std::vector<double>(static_cast<std::size_t>(d), 0.0));
        std::vector<int> cnt(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < n; ++i) {
            ++cnt[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])];
            for (int j = 0; j < d; ++j)
                mean[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])][static_cast<std::size_t>(j)] += x(i, j);
        }
        for (int g = 0; g < k; ++g)
            if (cnt[static_cast<std::size_t>(g)] > 0)
                for (int j = 0; j < d; ++j)
                    mean[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)] /= cnt[static_cast<std::size_t>(g)];
        double inertia = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) {
                double t = x(i, j) - mean[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])][static_cast<std::size_t>(j)];
                inertia += t * t;
            }
        best = std::min(best, inertia);
    }
    return best;
}

// Eigenvalues of a symmetric 3x3 matrix in closed (trigonometric) form,
// descending.
inline std::array<double, 3> eig3x3_closed_form(const acttend::Matrix& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    std::array<double, 3> eig{};
    if (p1 == 0.0) {
        eig = {a(0, 0), a(1, 1), a(2, 2)};
        std::sort(eig.begin(), eig.end(), std::greater<>());
        return eig;
    }
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    acttend::Matrix b = a;
    for (int i = 0; i < 3; ++i) b(i, i) -= q;
    for (double& v : b.values()) v /= p;
    const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0943951023931953;
    eig[0] = q + 2.0 * p * std::cos(phi);
    eig[2] = q + 2.0 * p * std::cos(phi + two_pi_3);
    eig[1] = 3.0 * q - eig[0] - eig[2];
    return eig;
}

// Enumerate every trainable scalar of a parameter set, for finite differences.
inline std::vector<double*> param_slots(acttend::ModelParams& p) {
    std::vector<double*> slots;
    for (auto& w : p.gcn_w)
        for (double& v : w.values()) slots.push_back(&v);
    for (auto& b : p.gcn_b)
        for (double& v : b) slots.push_back(&v);
    for (double& v : p.fc_w) slots.push_back(&v);
    slots.push_back(&p.fc_b);
    return slots;
}

inline std::vector<double> grad_slots(const acttend::Gradients& g) {
    std::vector<double> flat;
    for (const auto& w : g.gcn_w)
        for (double v : w.values()) flat.push_back(v);
    for (const auto& b : g.gcn_b)
        for (double v : b) flat.push_back(v);
    for (double v : g.fc_w) flat.push_back(v);
    flat.push_back(g.fc_b);
    return flat;
}

// Central finite differences of bce(gcn_forward) wrt every parameter.
inline std::vector<double> fd_gradients(const acttend::GraphRep& g, acttend::ModelParams p, bool y,
                                        double h = 1e-5) {
    auto slots = param_slots(p);
    std::vector<double> grad(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const double orig = *slots[s];
        *slots[s] = orig + h;
        const double lp = acttend::bce_loss(acttend::gcn_forward(g, p), y);
        *slots[s] = orig - h;
        const double lm = acttend::bce_loss(acttend::gcn_forward(g, p), y);
        *slots[s] = orig;
        grad[s] = (lp - lm) / (2.0 * h);
    }
    return grad;
}

// Random fixtures shared by a few suites.
inline acttend::Matrix random_matrix(int n, int d, acttend::Rng& rng, double scale = 1.0) {
    acttend::Matrix m(n, d);
    for (double& v : m.values()) v = rng.uniform(-scale, scale);
    return m;
}

}  // namespace oracles
