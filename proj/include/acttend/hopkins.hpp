#pragma once

#include <cstdint>

#include "acttend/matrix.hpp"

namespace acttend {

struct HopkinsResult {
    double score = 0.0;  // in [0,1]; ~0.5 for spatial randomness, ->1 for clustered
    int m_probes = 0;
    std::uint64_t seed = 0;
};

// Spatial-randomness test: m sampled real points vs m synthetic uniform points
// in the data's bounding box, comparing d-th powers of nearest-neighbor
// distances. m < 1 selects the default max(1, floor(0.1 n)).
HopkinsResult hopkins_statistic(const Matrix& points, int m, std::uint64_t seed);

// score >= threshold. threshold must lie in (0,1).
bool hopkins_classify(const Matrix& points, double threshold, int m, std::uint64_t seed);

}  // namespace acttend
