#pragma once

#include <cstdint>

#include "acttend/dataset.hpp"
#include "acttend/matrix.hpp"

namespace acttend {

enum class MixVariant {
    AddToNoise,   // full noise pool plus floor(p% * pool) structured points
    FixedBudget,  // constant total: p% structured, the rest noise
};

struct MixSpec {
    MixVariant variant = MixVariant::AddToNoise;
    double p_percent = 0.0;  // in [0, 100]
    int n_structured_pool = 200;
    int n_noise_base = 200;
    std::uint64_t seed = 0;
};

// i.i.d. uniform points per coordinate over the [min, max] range of the
// structured sample.
Matrix make_noise_like(const Matrix& structured, int m, std::uint64_t seed);

// Blend structured and noise pools per spec; sampling is without replacement.
// The output label is left unset (it is the quantity under test downstream).
Dataset mix(const Matrix& structured_pool, const Matrix& noise_pool, const MixSpec& spec);

}  // namespace acttend
