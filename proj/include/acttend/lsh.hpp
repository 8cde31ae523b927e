#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "acttend/matrix.hpp"

namespace acttend {

struct LshConfig {
    int n_tables = 8;
    int n_bits = 10;            // hyperplanes per table, <= 32
    double neighbor_pct = 0.1;  // query budget as a fraction of n
    int neighbor_cap = 50;
    std::uint64_t seed = 0;
};

void validate(const LshConfig& cfg);

// Random-hyperplane sign hashing. Each table draws n_bits Gaussian normal
// vectors; a point's key is the sign pattern of its projections. Construction
// is single-writer; afterwards the index is immutable and queries are
// thread-safe.
class LshIndex {
  public:
    LshIndex(const Matrix& points, const LshConfig& cfg);

    // Points sharing at least one bucket with i, ranked by Euclidean distance
    // (ties by lower id), truncated to min(ceil(pct*n), cap). May be empty.
    std::vector<std::pair<int, double>> query_neighbors(int i) const;

    std::uint32_t key_of(int table, int point) const;
    int n_points() const { return points_.rows(); }

  private:
    Matrix points_;
    LshConfig cfg_;
    std::vector<Matrix> hyperplanes_;                                    // per table: n_bits x d
    std::vector<std::unordered_map<std::uint32_t, std::vector<int>>> buckets_;
    std::vector<std::vector<std::uint32_t>> keys_;                       // [table][point]
};

// Per-node summary of the LSH neighborhood:
// [mean neighbor distance, neighbor count, population variance of distances].
// Nodes whose query comes back empty get [0, 0, 0].
Matrix node_features(const Matrix& points, const LshConfig& cfg);

}  // namespace acttend
