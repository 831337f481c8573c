#pragma once

#include <cstddef>
#include <vector>

namespace blockspec {

using Index = std::ptrdiff_t;

/// Row-major dense real matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(Index rows, Index cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {}

    static DenseMatrix identity(Index n);

    double& operator()(Index r, Index c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    double operator()(Index r, Index c) const {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double* row(Index r) { return data_.data() + r * cols_; }
    const double* row(Index r) const { return data_.data() + r * cols_; }

    DenseMatrix transposed() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);

/// Dense symmetric real matrix. Writes go through set(), which mirrors the
/// entry across the diagonal, so M(i,j) == M(j,i) holds bitwise by storage.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Index dim)
        : dim_(dim), data_(static_cast<std::size_t>(dim * dim), 0.0) {}

    double operator()(Index i, Index j) const {
        return data_[static_cast<std::size_t>(i * dim_ + j)];
    }
    void set(Index i, Index j, double v) {
        data_[static_cast<std::size_t>(i * dim_ + j)] = v;
        data_[static_cast<std::size_t>(j * dim_ + i)] = v;
    }
    void add(Index i, Index j, double v) { set(i, j, (*this)(i, j) + v); }

    Index dim() const { return dim_; }
    const double* row(Index r) const { return data_.data() + r * dim_; }

    double trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;
    void scale(double s);

    DenseMatrix to_dense() const;
    /// Builds from the upper triangle of a (not necessarily symmetric) square matrix.
    static SymMatrix from_dense_upper(const DenseMatrix& a);

private:
    Index dim_ = 0;
    std::vector<double> data_;
};

struct QrResult {
    DenseMatrix q;
    DenseMatrix r;
};

/// Householder QR of a square matrix with the standard stability convention
/// for reflector signs (pivot reflected away from its own sign, so the
/// diagonal of R carries data-dependent signs). No post-correction.
QrResult householder_qr(const DenseMatrix& a);

/// Determinant of a small square matrix by partially pivoted elimination.
double determinant(const DenseMatrix& a);

} // namespace blockspec
