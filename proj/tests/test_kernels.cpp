#include <doctest.h>
#include <omp.h>

#include "acttend/kernels.hpp"
#include "acttend/rng.hpp"
#include "support/oracles.hpp"

using namespace acttend;

namespace {

Csr random_csr(int n, Rng& rng) {
    // symmetric-ish sparse matrix with sorted columns per row
    std::vector<std::vector<std::pair<int, double>>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)].push_back({i, rng.uniform(0.1, 1.0)});
        for (int j = 0; j < n; ++j)
            if (j != i && rng.uniform01() < 0.2)
                rows[static_cast<std::size_t>(i)].push_back({j, rng.uniform(-1.0, 1.0)});
        std::sort(rows[static_cast<std::size_t>(i)].begin(), rows[static_cast<std::size_t>(i)].end());
    }
    Csr s;
    s.n = n;
    s.rowptr.push_back(0);
    for (int i = 0; i < n; ++i) {
        for (auto& [c, v] : rows[static_cast<std::size_t>(i)]) {
            s.col.push_back(c);
            s.val.push_back(v);
        }
        s.rowptr.push_back(static_cast<int>(s.col.size()));
    }
    return s;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("matmul matches serial reference bit-exactly") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.below(40));
        int k = 1 + static_cast<int>(rng.below(40));
        int m = 1 + static_cast<int>(rng.below(40));
        Matrix a = oracles::random_matrix(n, k, rng);
        Matrix b = oracles::random_matrix(k, m, rng);
        CHECK(matmul(a, b) == ref::matmul(a, b));
    }
}

TEST_CASE("matmul_at_b matches serial reference bit-exactly") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.below(40));
        int r = 1 + static_cast<int>(rng.below(20));
        int m = 1 + static_cast<int>(rng.below(20));
        Matrix a = oracles::random_matrix(n, r, rng);
        Matrix b = oracles::random_matrix(n, m, rng);
        CHECK(matmul_at_b(a, b) == ref::matmul_at_b(a, b));
    }
}

TEST_CASE("csr_matmul matches serial reference bit-exactly") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.below(60));
        Csr s = random_csr(n, rng);
        Matrix h = oracles::random_matrix(n, 1 + static_cast<int>(rng.below(16)), rng);
        CHECK(csr_matmul(s, h) == ref::csr_matmul(s, h));
    }
}

TEST_CASE("kmeans_assign matches serial reference bit-exactly") {
    Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.below(100));
        int d = 1 + static_cast<int>(rng.below(8));
        int k = 2 + static_cast<int>(rng.below(6));
        Matrix x = oracles::random_matrix(n, d, rng);
        Matrix c = oracles::random_matrix(k, d, rng);
        std::vector<int> l1, l2;
        std::vector<double> d1, d2;
        kmeans_assign(x, c, l1, d1);
        ref::kmeans_assign(x, c, l2, d2);
        CHECK(l1 == l2);
        CHECK(d1 == d2);
    }
}

TEST_CASE("results are independent of the thread count") {
    Rng rng(15);
    Matrix a = oracles::random_matrix(37, 23, rng);
    Matrix b = oracles::random_matrix(23, 31, rng);
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    Matrix c1 = matmul(a, b);
    omp_set_num_threads(saved);
    Matrix c2 = matmul(a, b);
    CHECK(c1 == c2);
}

TEST_CASE("shape mismatches are structural errors") {
    Matrix a(3, 4), b(5, 2);
    CHECK_THROWS_AS(matmul(a, b), StructuralError);
    CHECK_THROWS_AS(matmul_at_b(a, b), StructuralError);
}

}  // TEST_SUITE
