#include "acttend/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "acttend/errors.hpp"
#include "acttend/kernels.hpp"

namespace acttend {

void jacobi_eigh(const Matrix& sym, std::vector<double>& values, Matrix& vectors_rows) {
    const int n = sym.rows();
    if (sym.cols() != n) throw StructuralError("jacobi_eigh: matrix is not square");
    Matrix a = sym;
    Matrix v(n, n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };
    double frob = 0.0;
    for (double x : a.values()) frob += x * x;
    frob = std::sqrt(frob);
    const double tol = (frob > 0.0 ? frob : 1.0) * 1e-14;

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p), aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

    values.resize(static_cast<std::size_t>(n));
    vectors_rows = Matrix(n, n);
    for (int r = 0; r < n; ++r) {
        const int src = order[static_cast<std::size_t>(r)];
        values[static_cast<std::size_t>(r)] = a(src, src);
        for (int i = 0; i < n; ++i) vectors_rows(r, i) = v(i, src);
    }
}

PcaModel pca_fit(const Matrix& points, int r) {
    const int n = points.rows(), d = points.cols();
    if (n < 2) throw InputError("pca_fit needs n >= 2");
    if (r < 1 || r > std::min(n - 1, d))
        throw InputError("pca_fit: r = " + std::to_string(r) + " outside [1, min(n-1, d)] = [1, " +
                         std::to_string(std::min(n - 1, d)) + "]");

    PcaModel model;
    model.mean.assign(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) model.mean[static_cast<std::size_t>(j)] += points(i, j);
    for (double& m : model.mean) m /= static_cast<double>(n);

    Matrix centered(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) centered(i, j) = points(i, j) - model.mean[static_cast<std::size_t>(j)];

    Matrix cov = matmul_at_b(centered, centered);
    for (double& x : cov.values()) x /= static_cast<double>(n - 1);

    std::vector<double> values;
    Matrix vectors;
    jacobi_eigh(cov, values, vectors);

    model.components = Matrix(r, d);
    model.explained_variance.resize(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c) {
        model.explained_variance[static_cast<std::size_t>(c)] =
            std::max(0.0, values[static_cast<std::size_t>(c)]);
        // sign convention: the entry of largest magnitude is positive
        int arg = 0;
        double mag = -1.0;
        for (int j = 0; j < d; ++j)
            if (std::abs(vectors(c, j)) > mag) {
                mag = std::abs(vectors(c, j));
                arg = j;
            }
        const double flip = vectors(c, arg) < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < d; ++j) model.components(c, j) = flip * vectors(c, j);
    }
    return model;
}

Matrix pca_transform(const PcaModel& model, const Matrix& points) {
    const int d = static_cast<int>(model.mean.size());
    if (points.cols() != d)
        throw StructuralError("pca_transform: points have width " + std::to_string(points.cols()) +
                              ", model expects " + std::to_string(d));
    Matrix centered(points.rows(), d);
    for (int i = 0; i < points.rows(); ++i)
        for (int j = 0; j < d; ++j) centered(i, j) = points(i, j) - model.mean[static_cast<std::size_t>(j)];

    // (X - mean) * C^T: use (C * centered^T)^T == centered * C^T via matmul_at_b
    // on transposed operands; components rows are the projection directions.
    Matrix ct(d, model.components.rows());
    for (int i = 0; i < model.components.rows(); ++i)
        for (int j = 0; j < d; ++j) ct(j, i) = model.components(i, j);
    return matmul(centered, ct);
}

}  // namespace acttend
