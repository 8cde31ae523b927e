// Serial twins of the OpenMP kernels. Same loop structure minus the pragmas;
// tests assert bit-identical output, the bench target compares throughput.

#include <cassert>

#include "acttend/errors.hpp"
#include "acttend/kernels.hpp"

namespace acttend::ref {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw StructuralError("matmul: inner dimensions differ (" +
                              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
    const int n = a.rows(), k = a.cols(), m = b.cols();
    Matrix c(n, m);
    for (int i = 0; i < n; ++i) {
        double* ci = c.data() + static_cast<std::size_t>(i) * m;
        for (int t = 0; t < k; ++t) {
            const double ait = a(i, t);
            const double* bt = b.data() + static_cast<std::size_t>(t) * m;
            for (int j = 0; j < m; ++j) ci[j] += ait * bt[j];
        }
    }
    return c;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw StructuralError("matmul_at_b: row counts differ (" +
                              std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
    const int n = a.rows(), r = a.cols(), m = b.cols();
    Matrix c(r, m);
    for (int i = 0; i < r; ++i) {
        double* ci = c.data() + static_cast<std::size_t>(i) * m;
        for (int t = 0; t < n; ++t) {
            const double ati = a(t, i);
            const double* bt = b.data() + static_cast<std::size_t>(t) * m;
            for (int j = 0; j < m; ++j) ci[j] += ati * bt[j];
        }
    }
    return c;
}

Matrix csr_matmul(const Csr& s, const Matrix& h) {
    if (s.n != h.rows())
        throw StructuralError("csr_matmul: matrix has " + std::to_string(s.n) +
                              " rows but dense operand has " + std::to_string(h.rows()));
    const int m = h.cols();
    Matrix c(s.n, m);
    for (int i = 0; i < s.n; ++i) {
        double* ci = c.data() + static_cast<std::size_t>(i) * m;
        for (int idx = s.rowptr[i]; idx < s.rowptr[i + 1]; ++idx) {
            const double v = s.val[static_cast<std::size_t>(idx)];
            const double* hr = h.data() + static_cast<std::size_t>(s.col[static_cast<std::size_t>(idx)]) * m;
            for (int j = 0; j < m; ++j) ci[j] += v * hr[j];
        }
    }
    return c;
}

void kmeans_assign(const Matrix& points, const Matrix& centers,
                   std::vector<int>& labels, std::vector<double>& sq_dists) {
    assert(points.cols() == centers.cols());
    const int n = points.rows(), k = centers.rows();
    labels.assign(static_cast<std::size_t>(n), 0);
    sq_dists.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        int best = 0;
        double best_d = sq_dist(points.row(i), centers.row(0));
        for (int c = 1; c < k; ++c) {
            double d = sq_dist(points.row(i), centers.row(c));
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        labels[static_cast<std::size_t>(i)] = best;
        sq_dists[static_cast<std::size_t>(i)] = best_d;
    }
}

}  // namespace acttend::ref
