#pragma once

#include <cstdint>
#include <vector>

#include "acttend/dataset.hpp"

namespace acttend {

// Generator settings. n and k are sampled uniformly from their inclusive
// ranges; point a range at a single value to pin it.
struct GenConfig {
    int n_min = 100;
    int n_max = 500;
    int dim = 2;
    int k_min = 2;
    int k_max = 6;
    double cluster_std = 0.25;
    double box_halfwidth = 1.0;
    std::uint64_t seed = 0;
};

// Throws ConfigError naming the violated bound. k must stay in
// [2, max(2, n_min/4)] so clusters keep a sensible share of the points.
void validate(const GenConfig& cfg);

// k isotropic Gaussian blobs, centers uniform in [-halfwidth, halfwidth]^d,
// cluster sizes as equal as possible. label = true.
Dataset gen_clustered(const GenConfig& cfg);

// n i.i.d. uniform points on [-halfwidth, halfwidth]^d. label = false.
Dataset gen_uniform(int n, int d, double box_halfwidth, std::uint64_t seed);

struct CorpusConfig {
    int n_datasets = 0;  // must be even; half clustered, half uniform
    std::vector<int> dims;
    GenConfig tpl;
    // Per-dataset cluster_std is drawn from [frac_min, frac_max] * box_halfwidth
    // so positives span tight to faint structure.
    double std_frac_min = 0.05;
    double std_frac_max = 0.5;
    std::uint64_t master_seed = 0;
};

// Class-balanced labeled corpus. Every dataset is generated from a seed
// derived from (master_seed, index), so the corpus is reproducible and each
// member can be regenerated in isolation; final order is a seeded shuffle.
std::vector<Dataset> gen_corpus(const CorpusConfig& cfg);

}  // namespace acttend
