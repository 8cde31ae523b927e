#include "acttend/mix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "acttend/errors.hpp"
#include "acttend/rng.hpp"

namespace acttend {

Matrix make_noise_like(const Matrix& structured, int m, std::uint64_t seed) {
    const int n = structured.rows(), d = structured.cols();
    if (n < 2) throw InputError("make_noise_like needs at least 2 structured points");
    if (m < 1) throw InputError("make_noise_like: m must be >= 1");

    std::vector<double> lo(static_cast<std::size_t>(d), std::numeric_limits<double>::infinity());
    std::vector<double> hi(static_cast<std::size_t>(d), -std::numeric_limits<double>::infinity());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], structured(i, j));
            hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], structured(i, j));
        }

    Rng rng(seed);
    Matrix noise(m, d);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < d; ++j)
            noise(i, j) = rng.uniform(lo[static_cast<std::size_t>(j)], hi[static_cast<std::size_t>(j)]);
    return noise;
}

Dataset mix(const Matrix& structured_pool, const Matrix& noise_pool, const MixSpec& spec) {
    if (spec.p_percent < 0.0 || spec.p_percent > 100.0)
        throw InputError("mix: p_percent must be in [0,100], got " + std::to_string(spec.p_percent));
    if (structured_pool.rows() != spec.n_structured_pool)
        throw InputError("mix: structured pool has " + std::to_string(structured_pool.rows()) +
                         " rows, spec expects " + std::to_string(spec.n_structured_pool));
    if (noise_pool.rows() < spec.n_noise_base)
        throw InputError("mix: noise pool has " + std::to_string(noise_pool.rows()) +
                         " rows, spec needs " + std::to_string(spec.n_noise_base));
    if (structured_pool.cols() != noise_pool.cols())
        throw StructuralError("mix: pools have different widths");

    const int d = structured_pool.cols();
    const int n_structured =
        static_cast<int>(std::floor(spec.p_percent / 100.0 * spec.n_structured_pool));

    Rng rng(spec.seed);
    std::vector<int> structured_ids =
        rng.sample_without_replacement(spec.n_structured_pool, n_structured);

    int n_noise = 0;
    std::vector<int> noise_ids;
    if (spec.variant == MixVariant::AddToNoise) {
        n_noise = spec.n_noise_base;
        noise_ids.resize(static_cast<std::size_t>(n_noise));
        for (int i = 0; i < n_noise; ++i) noise_ids[static_cast<std::size_t>(i)] = i;
    } else {
        n_noise = spec.n_noise_base - n_structured;
        noise_ids = rng.sample_without_replacement(spec.n_noise_base, n_noise);
    }

    Dataset out;
    out.seed = spec.seed;
    out.points = Matrix(n_noise + n_structured, d);
    int row = 0;
    for (int id : noise_ids) {
        for (int j = 0; j < d; ++j) out.points(row, j) = noise_pool(id, j);
        ++row;
    }
    for (int id : structured_ids) {
        for (int j = 0; j < d; ++j) out.points(row, j) = structured_pool(id, j);
        ++row;
    }
    return out;
}

}  // namespace acttend
