#include "blockspec/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace blockspec {

void BlockLaw::validate() const {
    if (kind == BlockLawKind::Sl) {
        if (d < 2) {
            throw std::invalid_argument("BlockLaw: sl requires d >= 2");
        }
    } else if (d < 1) {
        throw std::invalid_argument("BlockLaw: block dimension must be >= 1");
    }
}

std::string BlockLaw::to_string() const {
    std::string name;
    switch (kind) {
    case BlockLawKind::HaarOrthogonal: name = "o-haar"; break;
    case BlockLawKind::HaarSpecialOrthogonal: name = "so-haar"; break;
    case BlockLawKind::QrNaiveOrthogonal: name = "o-qr-naive"; break;
    case BlockLawKind::Sl: name = "sl"; break;
    case BlockLawKind::GoeBlock: name = "goe"; break;
    case BlockLawKind::GaussianIid: name = "gauss-iid"; break;
    }
    return name + ":" + std::to_string(d);
}

BlockLaw BlockLaw::parse(const std::string& text, Index fallback_d) {
    std::string name = text;
    Index d = fallback_d;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        const std::string suffix = text.substr(colon + 1);
        try {
            d = static_cast<Index>(std::stol(suffix));
        } catch (const std::exception&) {
            throw std::invalid_argument("BlockLaw: bad dimension suffix in '" + text + "'");
        }
    }
    BlockLaw law;
    law.d = d;
    if (name == "o-haar") {
        law.kind = BlockLawKind::HaarOrthogonal;
    } else if (name == "so-haar") {
        law.kind = BlockLawKind::HaarSpecialOrthogonal;
    } else if (name == "o-qr-naive") {
        law.kind = BlockLawKind::QrNaiveOrthogonal;
    } else if (name == "sl") {
        law.kind = BlockLawKind::Sl;
    } else if (name == "goe") {
        law.kind = BlockLawKind::GoeBlock;
    } else if (name == "gauss-iid") {
        law.kind = BlockLawKind::GaussianIid;
    } else {
        throw std::invalid_argument("BlockLaw: unknown law '" + name + "'");
    }
    law.validate();
    return law;
}

DenseMatrix gaussian_matrix(RandomStream& s, Index rows, Index cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("gaussian_matrix: dimensions must be >= 1");
    }
    DenseMatrix g(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            g(i, j) = s.next_gaussian();
        }
    }
    return g;
}

DenseMatrix haar_orthogonal(RandomStream& s, Index d) {
    if (d < 1) {
        throw std::invalid_argument("haar_orthogonal: d must be >= 1");
    }
    auto [q, r] = householder_qr(gaussian_matrix(s, d, d));
    // Multiply column j of Q by sign(R_jj) so the R factor has a positive
    // diagonal; this is the correction that makes the law Haar.
    for (Index j = 0; j < d; ++j) {
        if (r(j, j) < 0.0) {
            for (Index i = 0; i < d; ++i) {
                q(i, j) = -q(i, j);
            }
        }
    }
    return q;
}

DenseMatrix haar_special_orthogonal(RandomStream& s, Index d) {
    DenseMatrix q = haar_orthogonal(s, d);
    if (determinant(q) < 0.0) {
        for (Index i = 0; i < d; ++i) {
            q(i, d - 1) = -q(i, d - 1);
        }
    }
    return q;
}

DenseMatrix rotation2(double theta) {
    DenseMatrix r(2, 2);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    r(0, 0) = c;
    r(0, 1) = -sn;
    r(1, 0) = sn;
    r(1, 1) = c;
    return r;
}

DenseMatrix qr_orthogonal_naive(RandomStream& s, Index d) {
    if (d < 1) {
        throw std::invalid_argument("qr_orthogonal_naive: d must be >= 1");
    }
    return householder_qr(gaussian_matrix(s, d, d)).q;
}

DenseMatrix sl_matrix(RandomStream& s, Index d, SlSignFix fix) {
    if (d < 2) {
        throw std::invalid_argument("sl_matrix: d must be >= 2");
    }
    DenseMatrix g;
    double det = 0.0;
    do {
        g = gaussian_matrix(s, d, d);
        det = determinant(g);
    } while (std::abs(det) < 1e-300);

    const double scale = std::pow(std::abs(det), -1.0 / static_cast<double>(d));
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            g(i, j) *= scale;
        }
    }
    if (det < 0.0) {
        Index col = 0;
        if (fix == SlSignFix::RandomColumn) {
            col = static_cast<Index>(s.next_u64() % static_cast<std::uint64_t>(d));
        }
        for (Index i = 0; i < d; ++i) {
            g(i, col) = -g(i, col);
        }
    }
    return g;
}

DenseMatrix goe_block(RandomStream& s, Index d) {
    const DenseMatrix g = gaussian_matrix(s, d, d);
    DenseMatrix b(d, d);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            b(i, j) = (g(i, j) + g(j, i)) * inv_sqrt2;
        }
    }
    return b;
}

DenseMatrix bartlett_T(RandomStream& s, Index d) {
    if (d < 1) {
        throw std::invalid_argument("bartlett_T: d must be >= 1");
    }
    DenseMatrix t(d, d);
    for (Index i = 0; i < d; ++i) {
        t(i, i) = std::sqrt(s.next_chi_square(static_cast<int>(d - i)));
        for (Index j = i + 1; j < d; ++j) {
            t(i, j) = s.next_gaussian();
        }
    }
    return t;
}

DenseMatrix sample_block(RandomStream& s, const BlockLaw& law) {
    law.validate();
    switch (law.kind) {
    case BlockLawKind::HaarOrthogonal:
        return haar_orthogonal(s, law.d);
    case BlockLawKind::HaarSpecialOrthogonal:
        return haar_special_orthogonal(s, law.d);
    case BlockLawKind::QrNaiveOrthogonal:
        return qr_orthogonal_naive(s, law.d);
    case BlockLawKind::Sl:
        return sl_matrix(s, law.d);
    case BlockLawKind::GoeBlock:
        // Off-diagonal blocks of a GOE matrix have i.i.d. N(0,1) entries.
        return gaussian_matrix(s, law.d, law.d);
    case BlockLawKind::GaussianIid:
        return gaussian_matrix(s, law.d, law.d);
    }
    throw std::logic_error("sample_block: unreachable");
}

DenseMatrix sample_diagonal_block(RandomStream& s, const BlockLaw& law) {
    if (law.kind == BlockLawKind::GoeBlock) {
        return goe_block(s, law.d);
    }
    return sample_block(s, law);
}

double sl2_top_density(double y) {
    if (y <= 1.0) {
        return 0.0;
    }
    const double u = y + 1.0 / y;
    return 2.0 * (1.0 - 1.0 / (y * y)) / (u * u);
}

double sl_joint_density_unnormalized(const std::vector<double>& y) {
    if (y.empty()) {
        throw std::invalid_argument("sl_joint_density_unnormalized: empty input");
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0)) {
            throw std::invalid_argument("sl_joint_density_unnormalized: entries must be positive");
        }
        if (i > 0 && !(y[i - 1] > y[i])) {
            throw std::invalid_argument(
                "sl_joint_density_unnormalized: entries must be strictly decreasing");
        }
    }
    double prod = 1.0;
    double sum = 0.0;
    for (double v : y) {
        prod *= v;
        sum += v;
    }
    const double last = y.back();
    if (!(prod > 1.0 / last)) {
        return 0.0;
    }
    const double alpha = 1.0 / prod;
    const double gamma = 0.5 * (sum + alpha);
    double r = alpha;
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = i + 1; j < y.size(); ++j) {
            r *= y[i] - y[j];
        }
        r *= y[i] - alpha;
    }
    const double dim = static_cast<double>(y.size() + 1);
    return r / std::pow(gamma, dim * dim / 2.0);
}

double sl2_top_eigenvalue(const DenseMatrix& b) {
    if (b.rows() != 2 || b.cols() != 2) {
        throw std::invalid_argument("sl2_top_eigenvalue: expects a 2x2 matrix");
    }
    // B^T B has determinant 1, so its eigenvalues are h ± sqrt(h^2 - 1)
    // with h half the trace.
    const double h = 0.5 * (b(0, 0) * b(0, 0) + b(1, 0) * b(1, 0) + b(0, 1) * b(0, 1) +
                            b(1, 1) * b(1, 1));
    return h + std::sqrt(std::max(0.0, h * h - 1.0));
}

double estimate_sl_sigma(RandomStream& s, Index d, long reps) {
    if (reps < 1) {
        throw std::invalid_argument("estimate_sl_sigma: reps must be >= 1");
    }
    double acc = 0.0;
    for (long r = 0; r < reps; ++r) {
        RandomStream sub = s.split(static_cast<std::uint64_t>(r));
        const DenseMatrix b = sl_matrix(sub, d);
        double tr = 0.0;
        for (Index i = 0; i < d; ++i) {
            for (Index j = 0; j < d; ++j) {
                tr += b(i, j) * b(i, j);
            }
        }
        acc += tr;
    }
    const double dd = static_cast<double>(d);
    return std::sqrt(acc / static_cast<double>(reps) / (dd * dd));
}

} // namespace blockspec
