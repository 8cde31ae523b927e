#pragma once

#include <vector>

#include "acttend/matrix.hpp"

namespace acttend {

// Compressed sparse rows, columns sorted ascending within each row.
struct Csr {
    int n = 0;
    std::vector<int> rowptr;  // n+1
    std::vector<int> col;
    std::vector<double> val;
};

// OpenMP kernels. Each loop parallelizes over independent output elements and
// keeps the per-element accumulation order fixed, so results are bit-identical
// to the serial reference in ref_kernels.hpp at any thread count.

// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);

// C = A^T * B  (A is n x r, B is n x c, C is r x c)
Matrix matmul_at_b(const Matrix& a, const Matrix& b);

// C = S * H for sparse symmetric S
Matrix csr_matmul(const Csr& s, const Matrix& h);

// Nearest center per point; ties go to the lower center index.
// sq_dists[i] is the squared distance to the winning center.
void kmeans_assign(const Matrix& points, const Matrix& centers,
                   std::vector<int>& labels, std::vector<double>& sq_dists);

namespace ref {

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_at_b(const Matrix& a, const Matrix& b);
Matrix csr_matmul(const Csr& s, const Matrix& h);
void kmeans_assign(const Matrix& points, const Matrix& centers,
                   std::vector<int>& labels, std::vector<double>& sq_dists);

}  // namespace ref

}  // namespace acttend
