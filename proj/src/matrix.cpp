#include "virmod/matrix.hpp"

#include <stdexcept>

namespace virmod {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::scale(const GaussianRational& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

std::vector<GaussianRational> Matrix::apply(
    const std::vector<GaussianRational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<GaussianRational> out(static_cast<std::size_t>(rows_),
                                      GaussianRational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero())
                continue;
            out[static_cast<std::size_t>(i)] +=
                at(i, j) * v[static_cast<std::size_t>(j)];
        }
    return out;
}

int Matrix::rank() const {
    Matrix work = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(rank, j));
        GaussianRational inv = GaussianRational(1) / work.at(rank, col);
        for (int j = col; j < cols_; ++j) work.at(rank, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || work.at(r, col).is_zero()) continue;
            GaussianRational factor = work.at(r, col);
            for (int j = col; j < cols_; ++j)
                work.at(r, j) -= factor * work.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace virmod
