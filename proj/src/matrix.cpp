#include "blockspec/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace blockspec {

DenseMatrix DenseMatrix::identity(Index n) {
    DenseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (Index r = 0; r < rows_; ++r) {
        for (Index c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) {
        s += v * v;
    }
    return std::sqrt(s);
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    DenseMatrix c(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) {
                continue;
            }
            const double* brow = b.row(k);
            double* crow = c.row(i);
            for (Index j = 0; j < b.cols(); ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
    return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix sum: shapes differ");
    }
    DenseMatrix c(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) + b(i, j);
        }
    }
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix difference: shapes differ");
    }
    DenseMatrix c(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
    DenseMatrix c(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            c(i, j) = s * a(i, j);
        }
    }
    return c;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (Index i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) {
        s += v * v;
    }
    return std::sqrt(s);
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool SymMatrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

void SymMatrix::scale(double s) {
    for (double& v : data_) {
        v *= s;
    }
}

DenseMatrix SymMatrix::to_dense() const {
    DenseMatrix m(dim_, dim_);
    for (Index i = 0; i < dim_; ++i) {
        for (Index j = 0; j < dim_; ++j) {
            m(i, j) = (*this)(i, j);
        }
    }
    return m;
}

SymMatrix SymMatrix::from_dense_upper(const DenseMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("from_dense_upper: matrix must be square");
    }
    SymMatrix m(a.rows());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = i; j < a.cols(); ++j) {
            m.set(i, j, a(i, j));
        }
    }
    return m;
}

QrResult householder_qr(const DenseMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("householder_qr: matrix must be square");
    }
    const Index n = a.rows();
    DenseMatrix r = a;
    DenseMatrix q = DenseMatrix::identity(n);
    std::vector<double> v(static_cast<std::size_t>(n));

    for (Index k = 0; k < n - 1; ++k) {
        double norm = 0.0;
        for (Index i = k; i < n; ++i) {
            norm += r(i, k) * r(i, k);
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            continue;
        }
        // v = x + sign(x_k) * ||x|| * e_k; maps the pivot to -sign(x_k)*||x||.
        const double alpha = (r(k, k) >= 0.0) ? norm : -norm;
        for (Index i = k; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = r(i, k);
        }
        v[static_cast<std::size_t>(k)] += alpha;
        double vnorm2 = 0.0;
        for (Index i = k; i < n; ++i) {
            vnorm2 += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        }
        if (vnorm2 == 0.0) {
            continue;
        }
        const double beta = 2.0 / vnorm2;
        for (Index j = k; j < n; ++j) {
            double dot = 0.0;
            for (Index i = k; i < n; ++i) {
                dot += v[static_cast<std::size_t>(i)] * r(i, j);
            }
            dot *= beta;
            for (Index i = k; i < n; ++i) {
                r(i, j) -= dot * v[static_cast<std::size_t>(i)];
            }
        }
        for (Index j = 0; j < n; ++j) {
            double dot = 0.0;
            for (Index i = k; i < n; ++i) {
                dot += v[static_cast<std::size_t>(i)] * q(j, i);
            }
            dot *= beta;
            for (Index i = k; i < n; ++i) {
                q(j, i) -= dot * v[static_cast<std::size_t>(i)];
            }
        }
        for (Index i = k + 1; i < n; ++i) {
            r(i, k) = 0.0;
        }
    }
    return {q, r};
}

double determinant(const DenseMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("determinant: matrix must be square");
    }
    const Index n = a.rows();
    DenseMatrix lu = a;
    double det = 1.0;
    for (Index k = 0; k < n; ++k) {
        Index pivot = k;
        double best = std::abs(lu(k, k));
        for (Index i = k + 1; i < n; ++i) {
            if (std::abs(lu(i, k)) > best) {
                best = std::abs(lu(i, k));
                pivot = i;
            }
        }
        if (best == 0.0) {
            return 0.0;
        }
        if (pivot != k) {
            for (Index j = 0; j < n; ++j) {
                std::swap(lu(k, j), lu(pivot, j));
            }
            det = -det;
        }
        det *= lu(k, k);
        for (Index i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / lu(k, k);
            for (Index j = k; j < n; ++j) {
                lu(i, j) -= f * lu(k, j);
            }
        }
    }
    return det;
}

} // namespace blockspec
