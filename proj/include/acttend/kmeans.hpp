#pragma once

#include <cstdint>
#include <vector>

#include "acttend/matrix.hpp"

namespace acttend {

struct KmeansResult {
    std::vector<int> assignment;  // cluster id per point, in [0,k)
    Matrix centers;               // k x d
    double inertia = 0.0;         // sum of squared distances to assigned centers
    int iterations = 0;
    std::vector<double> inertia_trace;  // inertia after each assignment step (winning restart)
};

// Lloyd iterations with k-means++ seeding, best of n_init restarts by inertia.
// Empty clusters are reseeded at the point farthest from its assigned center.
// Fully deterministic given seed.
KmeansResult kmeans(const Matrix& points, int k, int max_iter = 300, int n_init = 5,
                    std::uint64_t seed = 0);

}  // namespace acttend
