#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "acttend/matrix.hpp"

namespace acttend {

/// A point cloud with optional ground-truth "has cluster structure" label.
struct Dataset {
    Matrix points;  // n x d
    std::optional<bool> label;
    std::uint64_t seed = 0;

    int n() const { return points.rows(); }
    int dim() const { return points.cols(); }
};

// Throws InputError unless n >= 2, d >= 1 and every entry is finite.
void validate(const Dataset& ds);

// Per-column zero mean / unit variance (population std; zero-variance columns
// are left centered with std treated as 1).
Dataset standardize(const Dataset& ds);
Matrix standardize_points(const Matrix& points);

// CSV: one point per row, no header, 17 significant digits (round-trip exact).
// The sidecar JSON carries {"label", "seed", "dim", "n"}.
void save_csv(const Dataset& ds, const std::string& csv_path);
void save_sidecar(const Dataset& ds, const std::string& json_path);
Dataset load_csv(const std::string& csv_path);
Dataset load_csv(const std::string& csv_path, const std::string& sidecar_path);

}  // namespace acttend
