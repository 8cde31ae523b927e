#pragma once

#include <cstdint>
#include <vector>

#include "acttend/matrix.hpp"

namespace acttend {

// Mean silhouette over all points: s(i) = (b - a) / max(a, b) with a the mean
// distance to the point's own cluster and b the smallest mean distance to any
// other cluster. Singleton clusters contribute s(i) = 0.
double silhouette(const Matrix& points, const std::vector<int>& assignment);

struct SilhouetteBest {
    double score = 0.0;
    int k = 0;
};

// Sweep k = 2 .. min(k_max_cap, n-1) with k-means, return the best mean
// silhouette and its k (ties to the smaller k).
SilhouetteBest silhouette_best(const Matrix& points, int k_max_cap, std::uint64_t seed);

bool silhouette_classify(const Matrix& points, double threshold, int k_max_cap, std::uint64_t seed);

}  // namespace acttend
