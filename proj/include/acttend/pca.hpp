#pragma once

#include <vector>

#include "acttend/matrix.hpp"

namespace acttend {

struct PcaModel {
    std::vector<double> mean;                 // d
    Matrix components;                        // r x d, orthonormal rows
    std::vector<double> explained_variance;   // r, nonincreasing
};

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Returns eigenvalues (descending) and matching eigenvectors as rows.
void jacobi_eigh(const Matrix& sym, std::vector<double>& values, Matrix& vectors_rows);

// Top-r principal components of the sample covariance (divisor n-1). The
// largest-magnitude entry of each component is made positive. r <= min(n-1, d).
PcaModel pca_fit(const Matrix& points, int r);

// (points - mean) * components^T
Matrix pca_transform(const PcaModel& model, const Matrix& points);

}  // namespace acttend
