#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace acttend {

// Dense row-major matrix of doubles. Deliberately minimal: storage plus
// indexed access; all heavy math lives in kernels.hpp.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}
    Matrix(int rows, int cols, std::vector<double> values)
        : rows_(rows), cols_(cols), a_(std::move(values)) {
        assert(a_.size() == static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return a_.empty(); }

    double& operator()(int i, int j) {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }
    double operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }

    std::span<double> row(int i) {
        return {a_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_),
                static_cast<std::size_t>(cols_)};
    }
    std::span<const double> row(int i) const {
        return {a_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_),
                static_cast<std::size_t>(cols_)};
    }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    const std::vector<double>& values() const { return a_; }
    std::vector<double>& values() { return a_; }

    bool operator==(const Matrix& other) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

inline double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        double d = a[t] - b[t];
        s += d * d;
    }
    return s;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
}

}  // namespace acttend
