#pragma once

#include <vector>

#include "virmod/scalar.hpp"

namespace virmod {

/// Small dense matrix over GaussianRational; just enough exact linear
/// algebra for finite-dimensional B-module generators.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, GaussianRational(0)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int i, int j) {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const GaussianRational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scale(const GaussianRational& c) const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    /// Exact rank via Gaussian elimination.
    int rank() const;

private:
    int rows_;
    int cols_;
    std::vector<GaussianRational> a_;
};

}  // namespace virmod
