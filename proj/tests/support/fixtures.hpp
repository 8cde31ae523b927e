#pragma once

// Shared test fixtures: random graphs/params and a synthetic image corpus in
// the IDX byte layout (class templates plus pixel noise, so the images carry
// real cluster structure).

#include <algorithm>
#include <cstdint>
#include <vector>

#include "acttend/datagen.hpp"
#include "acttend/graph.hpp"
#include "acttend/gcn.hpp"
#include "acttend/rng.hpp"

namespace fixtures {

inline acttend::GraphRep random_graph(acttend::Rng& rng, int n_min = 8, int n_max = 24,
                                      acttend::EdgeStrategy strategy = acttend::EdgeStrategy::rbf(2.0)) {
    const int n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    const int d = 2 + static_cast<int>(rng.below(3));
    acttend::Dataset ds;
    ds.points = acttend::Matrix(n, d);
    for (double& v : ds.points.values()) v = rng.uniform(-2.0, 2.0);
    ds.seed = rng.next();
    ds.label = true;
    acttend::LshConfig lsh;
    lsh.n_tables = 4;
    lsh.n_bits = 4;
    lsh.seed = rng.next();
    const double pct = rng.uniform(0.2, 0.8);
    return acttend::build_graph(ds, lsh, strategy, pct);
}

inline acttend::ModelParams random_params(acttend::Rng& rng, int hidden) {
    acttend::ModelParams p = acttend::zero_params(hidden);
    for (auto& w : p.gcn_w)
        for (double& v : w.values()) v = rng.uniform(-0.7, 0.7);
    for (auto& b : p.gcn_b)
        for (double& v : b) v = rng.uniform(-0.3, 0.3);
    for (double& v : p.fc_w) v = rng.uniform(-0.7, 0.7);
    p.fc_b = rng.uniform(-0.3, 0.3);
    for (int j = 0; j < acttend::kNodeFeatureDim; ++j) {
        p.feat_mean[static_cast<std::size_t>(j)] = rng.uniform(-0.5, 0.5);
        p.feat_std[static_cast<std::size_t>(j)] = rng.uniform(0.5, 2.0);
    }
    return p;
}

struct IdxFixture {
    std::vector<std::uint8_t> pixels;  // count * 784
    std::vector<std::uint8_t> labels;
};

// n_images synthetic "digit" images: each class has a template with a bright
// localized blob; per-image pixel noise keeps classes tight but distinct.
inline IdxFixture make_digit_corpus(int n_images, int n_classes, double noise,
                                    std::uint64_t seed) {
    acttend::Rng rng(seed);
    std::vector<std::vector<double>> templates(static_cast<std::size_t>(n_classes),
                                               std::vector<double>(784, 0.0));
    for (int c = 0; c < n_classes; ++c) {
        const double cx = rng.uniform(6.0, 22.0), cy = rng.uniform(6.0, 22.0);
        const double rad = rng.uniform(3.0, 6.0);
        for (int y = 0; y < 28; ++y)
            for (int x = 0; x < 28; ++x) {
                const double dx = x - cx, dy = y - cy;
                templates[static_cast<std::size_t>(c)][static_cast<std::size_t>(y * 28 + x)] =
                    std::exp(-(dx * dx + dy * dy) / (2.0 * rad * rad));
            }
    }
    IdxFixture out;
    out.pixels.resize(static_cast<std::size_t>(n_images) * 784);
    out.labels.resize(static_cast<std::size_t>(n_images));
    for (int i = 0; i < n_images; ++i) {
        const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_classes)));
        out.labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c);
        for (int px = 0; px < 784; ++px) {
            double v = templates[static_cast<std::size_t>(c)][static_cast<std::size_t>(px)] +
                       noise * rng.normal();
            v = std::clamp(v, 0.0, 1.0);
            out.pixels[static_cast<std::size_t>(i) * 784 + static_cast<std::size_t>(px)] =
                static_cast<std::uint8_t>(std::llround(v * 255.0));
        }
    }
    return out;
}

}  // namespace fixtures
